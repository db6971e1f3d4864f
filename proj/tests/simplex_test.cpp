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

#include "wshare/simplex.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "wshare/core.hpp"
#include "wshare/fixtures.hpp"

namespace wshare {
namespace {

using R = Rational;

TEST(SimplexTest, SingleBound) {
  LinearProgram lp(1);
  lp.set_objective({R(1)}, Sense::kMaximize);
  lp.add_constraint({R(1)}, Relation::kLessEqual, R(5));
  const auto r = simplex_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, R(5));
  EXPECT_EQ(r.point, (RationalVector{R(5)}));
}

TEST(SimplexTest, DetectsInfeasibility) {
  LinearProgram lp(2);
  lp.set_objective({R(1), R(1)}, Sense::kMaximize);
  lp.add_constraint({R(1), R(0)}, Relation::kLessEqual, R(1));
  lp.add_constraint({R(0), R(1)}, Relation::kLessEqual, R(1));
  lp.add_constraint({R(1), R(1)}, Relation::kEqual, R(3));
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::kInfeasible);
}

TEST(SimplexTest, DetectsUnboundedness) {
  LinearProgram lp(2);
  lp.set_objective({R(1), R(0)}, Sense::kMaximize);
  lp.add_constraint({R(1), R(-1)}, Relation::kLessEqual, R(1));
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, FreeVariablesAndMinimization) {
  // min x + 2y with x free, x + y >= -3, y >= 1, x >= -10 as a row.
  LinearProgram lp(2);
  lp.set_free(0);
  lp.set_objective({R(1), R(2)}, Sense::kMinimize);
  lp.add_constraint({R(1), R(1)}, Relation::kGreaterEqual, R(-3));
  lp.add_constraint({R(0), R(1)}, Relation::kGreaterEqual, R(1));
  lp.add_constraint({R(1), R(0)}, Relation::kGreaterEqual, R(-10));
  const auto r = simplex_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, R(-2));
  EXPECT_EQ(r.point, (RationalVector{R(-4), R(1)}));
  EXPECT_TRUE(is_feasible(lp, r.point));
}

TEST(SimplexTest, NegativeRightHandSides) {
  LinearProgram lp(2);
  lp.set_objective({R(-1), R(-1)}, Sense::kMaximize);
  lp.add_constraint({R(-1), R(-2)}, Relation::kLessEqual, R(-4));
  lp.add_constraint({R(-3), R(-1)}, Relation::kLessEqual, R(-6));
  const auto r = simplex_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, R(-14, 5));
  EXPECT_EQ(r.point, (RationalVector{R(8, 5), R(6, 5)}));
}

TEST(SimplexTest, DegenerateProblemTerminates) {
  // Classic cycling example for the largest-coefficient rule.
  LinearProgram lp(4);
  lp.set_objective({R(10), R(-57), R(-9), R(-24)}, Sense::kMaximize);
  lp.add_constraint({R(1, 2), R(-11, 2), R(-5, 2), R(9)}, Relation::kLessEqual,
                    R(0));
  lp.add_constraint({R(1, 2), R(-3, 2), R(-1, 2), R(1)}, Relation::kLessEqual,
                    R(0));
  lp.add_constraint({R(1), R(0), R(0), R(0)}, Relation::kLessEqual, R(1));
  const auto r = simplex_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, R(1));
}

TEST(SimplexTest, RandomProgramsAreOptimalAgainstVertexScan) {
  // max c.x over {x >= 0, A x <= b} with b > 0 in 2D; compare with
  // every pairwise intersection of the constraint lines and axes.
  testing::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_matrix(rng, 4, 2, -5, 5);
    const auto b = testing::random_matrix(rng, 4, 1, 1, 9);
    const auto c = testing::random_matrix(rng, 1, 2, -5, 5)[0];
    LinearProgram lp(2);
    lp.set_objective(c, Sense::kMaximize);
    for (std::size_t r = 0; r < 4; ++r) {
      lp.add_constraint(a[r], Relation::kLessEqual, b[r][0]);
    }
    const auto result = simplex_solve(lp);
    if (result.status == LpStatus::kUnbounded) continue;
    ASSERT_TRUE(result.optimal());
    ASSERT_TRUE(is_feasible(lp, result.point));
    std::vector<std::pair<RationalVector, R>> lines;
    for (std::size_t r = 0; r < 4; ++r) lines.push_back({a[r], b[r][0]});
    lines.push_back({{R(1), R(0)}, R(0)});
    lines.push_back({{R(0), R(1)}, R(0)});
    for (std::size_t p = 0; p < lines.size(); ++p) {
      for (std::size_t q = p + 1; q < lines.size(); ++q) {
        const auto& [u, bu] = lines[p];
        const auto& [w, bw] = lines[q];
        const R det = u[0] * w[1] - u[1] * w[0];
        if (det.is_zero()) continue;
        const RationalVector x = {(bu * w[1] - u[1] * bw) / det,
                                  (u[0] * bw - bu * w[0]) / det};
        if (!is_feasible(lp, x)) continue;
        EXPECT_LE(c[0] * x[0] + c[1] * x[1], result.value);
      }
    }
  }
}

TEST(SimplexTest, CoreProgramOfTwoAgents) {
  const SetFunctionOracle o(
      std::get<MatchingInstance>(fixture("TWO", R(1, 5))));
  const auto verdict = ws_core_nonempty(o, DisagreementPoint::zeros(2));
  ASSERT_TRUE(verdict);
  EXPECT_EQ(*verdict.optimum, R(4, 5));
  EXPECT_EQ(verdict.target, R(4, 5));
}

}  // namespace
}  // namespace wshare
