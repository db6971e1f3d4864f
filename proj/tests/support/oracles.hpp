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

#ifndef WSHARE_TESTS_SUPPORT_ORACLES_HPP_
#define WSHARE_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "wshare/model.hpp"
#include "wshare/welfare.hpp"

namespace wshare::testing {

using Rng = std::mt19937_64;

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                             long lo, long hi);
MatchingInstance random_matching(Rng& rng, std::size_t n, long lo, long hi);
Instance random_general(Rng& rng, std::size_t n, std::size_t alternatives,
                        long lo, long hi);

struct PlantedBlocks {
  MatchingInstance instance;
  std::vector<AgentSet> agent_blocks;
  std::vector<AgentSet> item_blocks;
};

// Agents of block l value its items in [20, 40] and all others in [0, 9].
// Inside a block every agent ranks the same item first, so any block
// member can win it and the block cannot split further. Agents and items
// are shuffled so blocks are not contiguous.
PlantedBlocks planted_blocks(Rng& rng, const std::vector<std::size_t>& sizes);

// W_max of S by trying every injective map of S into items.
Rational brute_wmax(const MatchingInstance& m, AgentSet s);

// Random dictatorship on the materialized alternatives: for each order,
// agents in turn discard alternatives below their best remaining one.
RationalVector brute_rp(const MatchingInstance& m);

// WS-core nonemptiness by enumerating basic solutions of
// {x >= 0, x(S) <= f(S), x(N) = f(N)} (small n only).
bool core_nonempty_by_vertices(const SetFunctionOracle& o,
                               const DisagreementPoint& d);

// Components from a naive quadratic Pareto filter over all assignments.
std::vector<std::pair<AgentSet, AgentSet>> brute_components(
    const MatchingInstance& m);

// Equal-splits residual welfare over tight sets taken by increasing size:
// members of S not yet set share W(S) - d(S) - (already set part of S).
RationalVector reconstruct_from_tight_sets(const SetFunctionOracle& o,
                                           const DisagreementPoint& d,
                                           std::vector<AgentSet> tight);

}  // namespace wshare::testing

#endif  // WSHARE_TESTS_SUPPORT_ORACLES_HPP_
