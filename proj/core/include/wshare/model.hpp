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

#ifndef WSHARE_MODEL_HPP_
#define WSHARE_MODEL_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wshare/rational.hpp"

namespace wshare {

// Subset of agents as a bitmask; agent i is bit i.
class AgentSet {
 public:
  static constexpr std::size_t kMaxAgents = 62;

  constexpr AgentSet() = default;
  constexpr explicit AgentSet(std::uint64_t bits) : bits_(bits) {}
  static AgentSet all(std::size_t n);
  static AgentSet of(std::initializer_list<std::size_t> members);
  static AgentSet singleton(std::size_t i) { return AgentSet(1ULL << i); }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return std::popcount(bits_); }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1ULL; }
  bool subset_of(AgentSet o) const { return (bits_ & ~o.bits_) == 0; }

  AgentSet with(std::size_t i) const { return AgentSet(bits_ | (1ULL << i)); }
  AgentSet without(std::size_t i) const {
    return AgentSet(bits_ & ~(1ULL << i));
  }
  AgentSet operator|(AgentSet o) const { return AgentSet(bits_ | o.bits_); }
  AgentSet operator&(AgentSet o) const { return AgentSet(bits_ & o.bits_); }
  // Set difference.
  AgentSet operator-(AgentSet o) const { return AgentSet(bits_ & ~o.bits_); }
  friend bool operator==(AgentSet a, AgentSet b) = default;
  friend auto operator<=>(AgentSet a, AgentSet b) = default;

  std::vector<std::size_t> members() const;
  // "{1,3}" with one-based agent numbers, or labels when given.
  std::string str(const std::vector<std::string>* labels = nullptr) const;

 private:
  std::uint64_t bits_ = 0;
};

// Nonempty subsets of `universe` ordered by cardinality, then
// lexicographically by sorted member list.
std::vector<AgentSet> subsets_by_size(AgentSet universe);

// Agent -> item index.
using Assignment = std::vector<std::size_t>;

class Instance {
 public:
  Instance(std::vector<std::string> agents,
           std::vector<std::string> alternatives, RationalMatrix values);

  std::size_t n_agents() const { return agents_.size(); }
  std::size_t n_alternatives() const { return alternatives_.size(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& alternatives() const {
    return alternatives_;
  }
  const Rational& value(std::size_t agent, std::size_t alt) const {
    return values_[agent][alt];
  }
  const RationalMatrix& values() const { return values_; }
  RationalVector column(std::size_t alt) const;

  // Same alternatives; only the agents in `s`, in index order.
  Instance restrict_agents(AgentSet s) const;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> alternatives_;
  RationalMatrix values_;
};

class MatchingInstance {
 public:
  MatchingInstance(std::vector<std::string> agents,
                   std::vector<std::string> items, RationalMatrix values,
                   std::optional<Rational> rent = std::nullopt);

  std::size_t n_agents() const { return agents_.size(); }
  std::size_t n_items() const { return items_.size(); }
  bool square() const { return n_agents() == n_items(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& items() const { return items_; }
  const Rational& value(std::size_t agent, std::size_t item) const {
    return values_[agent][item];
  }
  const RationalMatrix& values() const { return values_; }
  const std::optional<Rational>& rent() const { return rent_; }

  // Agents and items both given as index sets (bit j = item j).
  MatchingInstance restrict(AgentSet agents, AgentSet items) const;
  RationalVector values_of(const Assignment& a) const;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> items_;
  RationalMatrix values_;
  std::optional<Rational> rent_;
};

// All injective agent -> item maps in lexicographic order.
std::vector<Assignment> enumerate_assignments(std::size_t n_agents,
                                              std::size_t n_items);

// Materializes every assignment as an alternative (same order as
// enumerate_assignments). Exponential; meant for small cross-checks.
Instance to_general(const MatchingInstance& m);

enum class Provenance { kUniform, kRpExact, kRpMonteCarlo, kEating, kExplicit };

std::string to_string(Provenance p);

struct DisagreementPoint {
  RationalVector utilities;
  Provenance provenance = Provenance::kExplicit;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static DisagreementPoint zeros(std::size_t n);
  static DisagreementPoint explicit_values(RationalVector u);
  std::size_t size() const { return utilities.size(); }
  const Rational& operator[](std::size_t i) const { return utilities[i]; }
};

// Alternative index for general instances, assignment for matching ones.
using AlternativeRef = std::variant<std::size_t, Assignment>;

std::string to_string(const AlternativeRef& alt,
                      const std::vector<std::string>* labels = nullptr);

// (A*, p) with u_i = v_i(A*) + p_i. The constructor derives transfers from
// the values and utilities and rejects anything that is not budget balanced.
class Solution {
 public:
  Solution(AlternativeRef alternative, RationalVector values_at_alternative,
           RationalVector utilities, std::string mechanism);

  const AlternativeRef& alternative() const { return alternative_; }
  const RationalVector& values() const { return values_; }
  const RationalVector& transfers() const { return transfers_; }
  const RationalVector& utilities() const { return utilities_; }
  const std::string& mechanism() const { return mechanism_; }
  std::size_t n_agents() const { return utilities_.size(); }

 private:
  AlternativeRef alternative_;
  RationalVector values_;
  RationalVector transfers_;
  RationalVector utilities_;
  std::string mechanism_;
};

// v'_i(j) = v_i(j) - rent/n; rent cleared. Identity when no rent is set.
MatchingInstance apply_rent_shift(const MatchingInstance& m);

// v'_i(A) = v_i(A) - d_i.
Instance normalize_to_disagreement(const Instance& inst,
                                   const DisagreementPoint& d);
// Every assignment gives agent i exactly one item, so shifting the row
// shifts v_i of every alternative by the same amount.
MatchingInstance normalize_to_disagreement(const MatchingInstance& m,
                                           const DisagreementPoint& d);

// Enumeration bounds. Environment overrides: WSHARE_MAX_SUBSET_AGENTS,
// WSHARE_MAX_RP_AGENTS, WSHARE_MAX_PARETO_AGENTS,
// WSHARE_MAX_PERMUTATION_AGENTS, WSHARE_MAX_COMPONENT_AGENTS.
struct Limits {
  std::size_t subset_agents = 14;
  std::size_t rp_agents = 10;
  std::size_t pareto_agents = 8;
  std::size_t permutation_agents = 8;
  std::size_t component_agents = 6;

  static Limits from_env();
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wshare

#endif  // WSHARE_MODEL_HPP_
