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

#include "wshare/mechanisms.hpp"

#include <gtest/gtest.h>

#include "wshare/fixtures.hpp"

namespace wshare {
namespace {

using R = Rational;

const ReportRow& row_of(const MechanismReport& r, MechanismKind k) {
  for (const auto& row : r.rows) {
    if (row.kind == k) return row;
  }
  throw std::out_of_range("no row");
}

TEST(MechanismsTest, NamesRoundTrip) {
  for (MechanismKind k : all_mechanisms()) {
    EXPECT_EQ(parse_mechanism(to_string(k)), k);
  }
  for (const char* m : {"rp", "eating", "uniform", "rp-mc", "explicit"}) {
    EXPECT_EQ(to_string(parse_disagreement_mode(m)), m);
  }
  EXPECT_THROW(parse_mechanism("banzhaf"), std::invalid_argument);
}

TEST(MechanismsTest, Applicability) {
  EXPECT_TRUE(applicable(MechanismKind::kEfMaxmin, fixture("EX1")));
  EXPECT_FALSE(applicable(MechanismKind::kEfMaxmin, fixture("EX3")));
  EXPECT_THROW(run_mechanism(MechanismKind::kEfMaxmin, fixture("EX3"), {}),
               std::invalid_argument);
  EXPECT_TRUE(needs_core(MechanismKind::kLexmax));
  EXPECT_FALSE(needs_core(MechanismKind::kShapley));
}

TEST(MechanismsTest, LexmaxRoutes) {
  const auto sub = run_mechanism(MechanismKind::kLexmax, fixture("EX1"), {});
  EXPECT_EQ(sub.route, "water_filling");
  EXPECT_TRUE(sub.trace.has_value());

  DisagreementSpec first;
  first.mode = DisagreementMode::kExplicit;
  first.explicit_utilities = RationalVector(3);
  const auto wf = run_mechanism(MechanismKind::kLexmax, fixture("WF_FAIL"), first);
  EXPECT_EQ(wf.route, "lexmax_lp");
  EXPECT_EQ(wf.solution.utilities(), (RationalVector{0, 1, 1}));
  EXPECT_THROW(run_mechanism(MechanismKind::kLexmax, fixture("EMPTY_CORE"), first),
               EmptyCore);
}

TEST(MechanismsTest, DisagreementModes) {
  const AnyInstance ex1 = fixture("EX1");
  DisagreementSpec spec;
  spec.mode = DisagreementMode::kEating;
  EXPECT_EQ(compute_disagreement(ex1, spec).provenance, Provenance::kEating);
  EXPECT_THROW(compute_disagreement(fixture("EX3"), spec), std::invalid_argument);
  spec.mode = DisagreementMode::kExplicit;
  spec.explicit_utilities = {R(1)};
  EXPECT_THROW(compute_disagreement(ex1, spec), std::invalid_argument);
  spec.mode = DisagreementMode::kRpMonteCarlo;
  spec.samples = 1000;
  EXPECT_EQ(compute_disagreement(ex1, spec).samples, 1000u);
  EXPECT_THROW(mechanism_fn(MechanismKind::kLexmax, spec), std::invalid_argument);
}

TEST(CompareTest, TwoAgentTable) {
  const R delta(1, 5);
  const auto report = compare_mechanisms(fixture("TWO", delta), {});
  auto u = [&](MechanismKind k) {
    return row_of(report, k).run->solution.utilities();
  };
  const R half_rest = (R(1) - delta) / R(2);
  EXPECT_EQ(u(MechanismKind::kEfMaxmin), (RationalVector{half_rest, half_rest}));
  EXPECT_EQ(u(MechanismKind::kShapley), (RationalVector{R(1) - delta, R(0)}));
  EXPECT_EQ(u(MechanismKind::kKs),
            (RationalVector{(R(1) - delta) / (R(1) + delta),
                            delta * (R(1) - delta) / (R(1) + delta)}));
  EXPECT_EQ(u(MechanismKind::kLexmax),
            (RationalVector{R(1) - R(2) * delta, delta}));
}

TEST(CompareTest, FlagsOnNamedFixtures) {
  const auto ks4 = compare_mechanisms(fixture("KS4"), {});
  EXPECT_FALSE(row_of(ks4, MechanismKind::kKs).flags.weakly_decomposable);
  EXPECT_TRUE(row_of(ks4, MechanismKind::kLexmax).flags.weakly_decomposable);

  const auto ex3 = compare_mechanisms(fixture("EX3"), {});
  EXPECT_FALSE(row_of(ex3, MechanismKind::kShapley).flags.in_anticore);
  for (const auto& row : ex3.rows) EXPECT_NE(row.kind, MechanismKind::kEfMaxmin);

  const auto nash = compare_mechanisms(fixture("NASH"), {});
  EXPECT_FALSE(row_of(nash, MechanismKind::kNash).flags.reasonable_from_above);
  EXPECT_TRUE(row_of(nash, MechanismKind::kKs).flags.reasonable_from_above);
}

TEST(CompareTest, EmptyCoreRowsCarryErrors) {
  DisagreementSpec first;
  first.mode = DisagreementMode::kExplicit;
  first.explicit_utilities = RationalVector(3);
  const auto r = compare_mechanisms(fixture("EMPTY_CORE"), first);
  EXPECT_FALSE(row_of(r, MechanismKind::kLexmax).run.has_value());
  EXPECT_FALSE(row_of(r, MechanismKind::kLexmax).error.empty());
  EXPECT_TRUE(row_of(r, MechanismKind::kShapley).run.has_value());
}

}  // namespace
}  // namespace wshare
