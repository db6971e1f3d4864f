// Copyright 2026 The wshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wshare/fixtures.hpp"
#include "wshare/model.hpp"

#include <gtest/gtest.h>

namespace wshare {
namespace {

using R = Rational;

TEST(AgentSetTest, BasicOperations) {
  const AgentSet s = AgentSet::of({0, 2});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_TRUE(s.subset_of(AgentSet::all(3)));
  EXPECT_EQ(s.with(1), AgentSet::all(3));
  EXPECT_EQ(AgentSet::all(3) - s, AgentSet::singleton(1));
  EXPECT_EQ(s.str(), "{1,3}");
  const std::vector<std::string> labels = {"a", "b", "c"};
  EXPECT_EQ(s.str(&labels), "{a,c}");
}

TEST(AgentSetTest, SubsetsBySizeThenLexicographic) {
  const auto subsets = subsets_by_size(AgentSet::all(3));
  ASSERT_EQ(subsets.size(), 7u);
  const std::vector<AgentSet> expected = {
      AgentSet::of({0}),    AgentSet::of({1}),    AgentSet::of({2}),
      AgentSet::of({0, 1}), AgentSet::of({0, 2}), AgentSet::of({1, 2}),
      AgentSet::all(3)};
  EXPECT_EQ(subsets, expected);
}

TEST(InstanceTest, RejectsRaggedOrEmptyTables) {
  EXPECT_THROW(Instance({}, {"x"}, {}), std::invalid_argument);
  EXPECT_THROW(Instance({"a", "b"}, {"x", "y"}, {{1, 2}, {3}}),
               std::invalid_argument);
  EXPECT_THROW(MatchingInstance({"a", "b"}, {"x"}, {{1}, {2}}),
               std::invalid_argument);
}

TEST(InstanceTest, EnumerateAssignmentsIsInjective) {
  const auto all = enumerate_assignments(2, 3);
  EXPECT_EQ(all.size(), 6u);
  for (const auto& a : all) EXPECT_NE(a[0], a[1]);
  EXPECT_EQ(enumerate_assignments(3, 3).size(), 6u);
}

TEST(SolutionTest, DerivesTransfersAndEnforcesBudgetBalance) {
  const Solution s(std::size_t{0}, {R(1), R(3)}, {R(2), R(2)}, "test");
  EXPECT_EQ(s.transfers(), (RationalVector{R(1), R(-1)}));
  EXPECT_THROW(Solution(std::size_t{0}, {R(1), R(3)}, {R(2), R(3)}, "test"),
               std::logic_error);
}

TEST(RentShiftTest, SubtractsRentShare) {
  const MatchingInstance zero({"a", "b"}, {"x", "y"}, {{1, 2}, {3, 4}}, R(0));
  EXPECT_EQ(apply_rent_shift(zero).values(), zero.values());

  const MatchingInstance three({"a", "b", "c"}, {"x", "y", "z"},
                               RationalMatrix(3, RationalVector(3, R(1))),
                               R(3));
  const MatchingInstance shifted3 = apply_rent_shift(three);
  EXPECT_EQ(shifted3.values(), RationalMatrix(3, RationalVector(3, R(0))));
  EXPECT_FALSE(shifted3.rent().has_value());

  const MatchingInstance two({"a", "b"}, {"x", "y"}, {{2, 0}, {0, 2}}, R(1));
  const RationalMatrix expected = {{R(3, 2), R(-1, 2)}, {R(-1, 2), R(3, 2)}};
  EXPECT_EQ(apply_rent_shift(two).values(), expected);

  const MatchingInstance wide({"a"}, {"x", "y"}, {{1, 2}}, R(1));
  EXPECT_THROW(apply_rent_shift(wide), std::invalid_argument);
}

TEST(NormalizeTest, ShiftsRowsByDisagreement) {
  const auto ex5 = std::get<MatchingInstance>(fixture("EX5"));
  const auto sub = ex5.restrict(AgentSet::all(3), AgentSet::of({0, 1, 2}));
  const auto shifted = normalize_to_disagreement(
      sub, DisagreementPoint::explicit_values({R(8), R(7), R(14)}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const R shift = i == 0 ? R(8) : (i == 1 ? R(7) : R(14));
      EXPECT_EQ(shifted.value(i, j), sub.value(i, j) - shift);
    }
  }
  const auto two = std::get<MatchingInstance>(fixture("TWO", R(1, 5)));
  EXPECT_EQ(normalize_to_disagreement(two, DisagreementPoint::zeros(2)).values(),
            two.values());
  EXPECT_THROW(normalize_to_disagreement(two, DisagreementPoint::zeros(3)),
               std::invalid_argument);
}

TEST(FixtureTest, TablesMatchPublishedRows) {
  const auto ex1 = std::get<MatchingInstance>(fixture("EX1", R(1, 10)));
  EXPECT_EQ(ex1.values()[0], (RationalVector{R(9, 10), R(1, 10), R(0)}));
  const auto ex3 = std::get<Instance>(fixture("EX3"));
  EXPECT_EQ(ex3.values()[2], (RationalVector{0, 0, 2, 2}));
  const auto ks4 = std::get<MatchingInstance>(fixture("KS4"));
  EXPECT_EQ(ks4.values()[3], (RationalVector{0, 0, 4, 20}));
}

TEST(FixtureTest, IdentityWelfareOfEx1) {
  for (const R& delta : {R(1, 10), R(1, 5), R(1, 8)}) {
    const auto ex1 = std::get<MatchingInstance>(fixture("EX1", delta));
    EXPECT_EQ(sum(ex1.values_of({0, 1, 2})), R(3, 2) + R(2) * delta);
  }
}

TEST(FixtureTest, RejectsUnknownNamesAndBadParameters) {
  EXPECT_THROW(fixture("NOPE"), std::invalid_argument);
  EXPECT_THROW(fixture("EX1", R(1, 4)), std::invalid_argument);
  EXPECT_THROW(fixture("EX1", R(0)), std::invalid_argument);
  EXPECT_THROW(fixture("LIP", R(5, 2)), std::invalid_argument);
}

TEST(FixtureTest, SpecSyntax) {
  EXPECT_TRUE(is_fixture_spec("EX1(1/10)"));
  EXPECT_TRUE(is_fixture_spec("TWO:2/5"));
  EXPECT_TRUE(is_fixture_spec("KS4"));
  EXPECT_FALSE(is_fixture_spec("instance.json"));
  const auto two = std::get<MatchingInstance>(fixture_from_spec("TWO:2/5"));
  EXPECT_EQ(two.value(1, 0), R(2, 5));
  for (const auto& name : fixture_names()) {
    EXPECT_NO_THROW(fixture(name)) << name;
  }
}

}  // namespace
}  // namespace wshare
