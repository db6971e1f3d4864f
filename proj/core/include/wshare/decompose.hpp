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

#ifndef WSHARE_DECOMPOSE_HPP_
#define WSHARE_DECOMPOSE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "wshare/fixtures.hpp"
#include "wshare/model.hpp"

namespace wshare {

enum class Certificate { kExact, kSufficient, kUserSuppliedVerified };

std::string to_string(Certificate c);

struct ComponentPartition {
  std::vector<AgentSet> agent_blocks;
  // Paired item blocks (bit j = item j); empty for general instances.
  std::vector<AgentSet> item_blocks;
  Certificate certificate = Certificate::kSufficient;

  std::size_t size() const { return agent_blocks.size(); }
  bool has_items() const { return !item_blocks.empty(); }
  // Block index per agent.
  std::vector<std::size_t> block_of(std::size_t n_agents) const;
};

// Exact path for square instances up to limits.pareto_agents: components of
// the agent-item graph spanned by all Pareto-optimal assignments. Larger
// instances get the preference-block partition.
ComponentPartition find_components_matching(
    const MatchingInstance& m, const Limits& limits = Limits::from_env());

// Splits blocks while some agent group ranks a strict top set of items,
// of its own size, above the rest of the block, and the rest of the group
// ranks the remaining items above that set.
ComponentPartition preference_blocks(const MatchingInstance& m);

// Pareto-optimal assignments of a square instance (n <= pareto bound).
std::vector<Assignment> pareto_optimal_assignments(
    const MatchingInstance& m, const Limits& limits = Limits::from_env());

struct ComponentVerdict {
  bool ok = true;
  // On failure: A is Pareto optimal for S, B for the complement, and no
  // alternative matches A on S and B off S.
  std::size_t a = 0;
  std::size_t b = 0;
  explicit operator bool() const { return ok; }
};

ComponentVerdict verify_component(const Instance& inst, AgentSet s,
                                  const Limits& limits = Limits::from_env());

// Minimal components of a general instance, by testing every subset
// (n <= limits.component_agents).
ComponentPartition find_components_general(
    const Instance& inst, const Limits& limits = Limits::from_env());

// Checks each supplied block with verify_component; throws
// std::invalid_argument naming the first block that is not a component.
ComponentPartition verify_partition(const Instance& inst,
                                    const std::vector<AgentSet>& blocks,
                                    const Limits& limits = Limits::from_env());

struct WeakVerdict {
  bool ok = true;
  std::size_t block = 0;
  Rational net_transfer;
  explicit operator bool() const { return ok; }
};

// Net transfer into every block is zero.
WeakVerdict check_weak_decomposability(const ComponentPartition& partition,
                                       const Solution& sol);

// Utilities per agent for an instance; must be deterministic and exact.
using MechanismFn = std::function<RationalVector(const AnyInstance&)>;

struct StrongVerdict {
  bool ok = true;
  std::size_t agent = 0;
  Rational whole;
  Rational component;
  explicit operator bool() const { return ok; }
};

// Agents of block b (and, for matching, its items) as a standalone instance.
AnyInstance restrict_to_block(const AnyInstance& inst,
                              const ComponentPartition& partition,
                              std::size_t block);

StrongVerdict check_strong_decomposability(const MechanismFn& mechanism,
                                           const AnyInstance& inst,
                                           const ComponentPartition& partition);

}  // namespace wshare

#endif  // WSHARE_DECOMPOSE_HPP_
