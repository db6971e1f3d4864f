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

#ifndef WSHARE_DISAGREEMENT_HPP_
#define WSHARE_DISAGREEMENT_HPP_

#include <cstdint>
#include <vector>

#include "wshare/model.hpp"
#include "wshare/rational.hpp"

namespace wshare {

// Row mean: uniform distribution over alternatives (general) or over
// assignments (matching, where every item is equally likely per agent).
DisagreementPoint uniform(const Instance& inst);
DisagreementPoint uniform(const MatchingInstance& m);

// Utilities of a fixed disagreement alternative.
DisagreementPoint alternative_disagreement(const Instance& inst,
                                           std::size_t alternative);

struct RpDetail {
  DisagreementPoint point;
  // probability[i][j]: agent i ends with item j.
  RationalMatrix probability;
};

// Random Priority averaged over all n! orders. Requires n_items >= n_agents.
// An agent with several tied best items is held; she keeps a claim on one
// of them and later agents only see items that leave every held agent a
// desired item. Held groups whose desired items are exactly as many as the
// group are settled as soon as that happens; the rest are settled by the
// lexicographically first matching at the end of the order.
RpDetail rp_exact_detail(const MatchingInstance& m,
                         const Limits& limits = Limits::from_env());
DisagreementPoint rp_exact(const MatchingInstance& m,
                           const Limits& limits = Limits::from_env());

// Random dictatorship over alternatives: in order, each agent discards the
// alternatives she does not rank highest among those left.
DisagreementPoint rp_exact(const Instance& inst,
                           const Limits& limits = Limits::from_env());

// Empirical mean over sampled orders. Sample k draws its order from a
// generator seeded by (seed, k) alone.
DisagreementPoint rp_montecarlo(const MatchingInstance& m,
                                std::uint64_t samples, std::uint64_t seed);
DisagreementPoint rp_montecarlo(const Instance& inst, std::uint64_t samples,
                                std::uint64_t seed);

// The k-th sampled order used by rp_montecarlo.
std::vector<std::size_t> sampled_order(std::size_t n, std::uint64_t seed,
                                       std::uint64_t k);

// Items each agent receives under serial selection in `order`.
Assignment serial_selection(const MatchingInstance& m,
                            const std::vector<std::size_t>& order);

struct EatingPhase {
  Rational length;
  std::vector<std::size_t> exhausted_items;
};

struct EatingSchedule {
  RationalMatrix x;  // agents x items, fraction eaten
  std::vector<EatingPhase> phases;
};

struct EatingResult {
  EatingSchedule schedule;
  DisagreementPoint point;
};

// Probabilistic serial. Every agent eats for one time unit from her best
// remaining items; with k tied best items she eats each at rate 1/k.
EatingResult eating(const MatchingInstance& m);

}  // namespace wshare

#endif  // WSHARE_DISAGREEMENT_HPP_
