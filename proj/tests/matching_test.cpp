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

#include "wshare/matching.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace wshare {
namespace {

using R = Rational;

TEST(MatchingTest, MaximumWeightMatchesBruteForce) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t m = n + trial % 3;
    const auto w = testing::random_matrix(rng, n, m, -10, 10);
    const MatchingInstance inst(std::vector<std::string>(n, "a"),
                                std::vector<std::string>(m, "i"), w);
    const auto result = max_weight_matching(w);
    EXPECT_EQ(result.value, testing::brute_wmax(inst, AgentSet::all(n)));
    R total;
    for (std::size_t i = 0; i < n; ++i) total += w[i][result.assignment[i]];
    EXPECT_EQ(total, result.value);
  }
}

TEST(MatchingTest, LexFirstPicksSmallestOptimalAssignment) {
  const RationalMatrix ties(3, RationalVector(3, R(1)));
  EXPECT_EQ(lex_first_max_weight_matching(ties).assignment,
            (Assignment{0, 1, 2}));
  const RationalMatrix w = {{1, 1, 0}, {1, 1, 0}, {0, 0, 5}};
  EXPECT_EQ(lex_first_max_weight_matching(w).assignment,
            (Assignment{0, 1, 2}));
  const RationalMatrix swap = {{0, 1}, {1, 0}};
  EXPECT_EQ(lex_first_max_weight_matching(swap).assignment,
            (Assignment{1, 0}));
}

TEST(MatchingTest, MatchRowsFindsSystemsOfDistinctRepresentatives) {
  EXPECT_TRUE(match_rows({0b011, 0b001, 0b100}).has_value());
  EXPECT_FALSE(match_rows({0b001, 0b001}).has_value());
  EXPECT_EQ(*lex_first_match_rows({0b011, 0b011}), (Assignment{0, 1}));
  EXPECT_EQ(*lex_first_match_rows({0b110, 0b010}), (Assignment{2, 1}));
}

}  // namespace
}  // namespace wshare
