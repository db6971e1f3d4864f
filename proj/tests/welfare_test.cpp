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

#include "wshare/welfare.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "wshare/fixtures.hpp"

namespace wshare {
namespace {

using R = Rational;

SetFunctionOracle oracle(std::string_view name,
                         std::optional<Rational> p = std::nullopt) {
  return std::visit([](const auto& inst) { return SetFunctionOracle(inst); },
                    fixture(name, p));
}

TEST(WelfareTest, Ex4Values) {
  const auto o = oracle("EX4");
  // Agents A, B, C, D are indices 0..3.
  EXPECT_EQ(o.wmax(AgentSet::of({0, 1, 3})), R(4));
  EXPECT_EQ(o.wmax(AgentSet::of({0, 2, 3})), R(4));
  EXPECT_EQ(o.wmax(AgentSet::of({0, 3})), R(3));
  EXPECT_EQ(o.wmax(AgentSet::all(4)), R(6));
  EXPECT_EQ(o.wmax(AgentSet()), R(0));
}

TEST(WelfareTest, Ex1MatchingWelfare) {
  const auto o = oracle("EX1", R(1, 10));
  EXPECT_EQ(o.wmax(o.all()), R(17, 10));
  EXPECT_EQ(std::get<Assignment>(o.wmax_argmax(o.all())),
            (Assignment{0, 1, 2}));
}

TEST(WelfareTest, ArgmaxOfGeneralInstance) {
  const auto o = oracle("EX3");
  EXPECT_EQ(std::get<std::size_t>(o.wmax_argmax(o.all())), 3u);
  EXPECT_EQ(std::get<std::size_t>(o.wmax_argmax(AgentSet::singleton(1))), 1u);
}

TEST(WelfareTest, DualAndDisagreementWelfare) {
  const auto o = oracle("TWO", R(2, 5));
  EXPECT_EQ(o.dual(AgentSet::singleton(0)), R(1, 5));
  EXPECT_EQ(o.dual(o.all()), o.wmax(o.all()));
  EXPECT_EQ(o.dual(AgentSet()), R(0));

  const auto d = DisagreementPoint::explicit_values({R(8), R(7), R(14)});
  EXPECT_EQ(wpi(d, AgentSet::of({0, 1})), R(15));
  EXPECT_EQ(wpi(d, AgentSet::singleton(2)), R(14));
  EXPECT_EQ(wpi(DisagreementPoint::zeros(3), AgentSet::all(3)), R(0));
}

TEST(WelfareTest, TableBackingValidatesInput) {
  EXPECT_THROW(SetFunctionOracle::from_table(2, {R(0), R(1)}),
               std::invalid_argument);
  EXPECT_THROW(SetFunctionOracle::from_table(1, {R(1), R(1)}),
               std::invalid_argument);
  const auto o = SetFunctionOracle::from_table(2, {R(0), R(1), R(2), R(4)});
  EXPECT_EQ(o.wmax(AgentSet::all(2)), R(4));
  EXPECT_FALSE(o.has_alternatives());
  // 4 > 1 + 2 breaks submodularity.
  EXPECT_FALSE(is_submodular(o));
}

TEST(WelfareTest, SubmodularityVerdicts) {
  const auto ex4 = oracle("EX4");
  const auto verdict = is_submodular(ex4);
  ASSERT_FALSE(verdict);
  EXPECT_EQ(verdict.s, AgentSet::of({0, 1, 3}));
  EXPECT_EQ(verdict.t, AgentSet::of({0, 2, 3}));
  EXPECT_EQ(ex4.wmax(verdict.s) + ex4.wmax(verdict.t), R(8));
  EXPECT_EQ(ex4.wmax(verdict.s & verdict.t) + ex4.wmax(verdict.s | verdict.t),
            R(9));

  EXPECT_FALSE(is_submodular(oracle("EX3")));
  EXPECT_TRUE(is_submodular(oracle("KS4")));
  EXPECT_TRUE(is_submodular(oracle("EX1")));
}

TEST(WelfareTest, SubmodularityRespectsBound) {
  Limits tight;
  tight.subset_agents = 3;
  EXPECT_THROW(is_submodular(oracle("KS4"), tight), BoundExceeded);
}

TEST(WelfareTest, MatchingWmaxAgreesWithEnumeration) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = testing::random_matching(rng, n, -10, 10);
    const SetFunctionOracle o(m);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      ASSERT_EQ(o.wmax(AgentSet(mask)), testing::brute_wmax(m, AgentSet(mask)));
    }
    EXPECT_TRUE(is_submodular(o));
  }
}

TEST(WelfareTest, ArgmaxAchievesWmaxOnSubsets) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_matching(rng, 4, -5, 5);
    const SetFunctionOracle o(m);
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
      const AgentSet s(mask);
      const auto a = std::get<Assignment>(o.wmax_argmax(s));
      const auto members = s.members();
      ASSERT_EQ(a.size(), members.size());
      R total;
      for (std::size_t k = 0; k < members.size(); ++k) {
        total += m.value(members[k], a[k]);
      }
      EXPECT_EQ(total, o.wmax(s));
    }
  }
}

}  // namespace
}  // namespace wshare
