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

#ifndef WSHARE_WELFARE_HPP_
#define WSHARE_WELFARE_HPP_

#include <memory>
#include <optional>
#include <variant>

#include "wshare/model.hpp"
#include "wshare/rational.hpp"

namespace wshare {

// W_max on agent subsets, backed by a general instance, a matching instance
// or an explicit table indexed by subset bitmask. Copies share one memo;
// the backing instance is immutable.
class SetFunctionOracle {
 public:
  explicit SetFunctionOracle(Instance inst);
  explicit SetFunctionOracle(MatchingInstance m);
  // table[mask] = W_max(mask); table[0] must be 0.
  static SetFunctionOracle from_table(std::size_t n_agents,
                                      RationalVector table);

  std::size_t n_agents() const { return n_; }
  AgentSet all() const { return AgentSet::all(n_); }

  Rational wmax(AgentSet s) const;
  // W_max(N) - W_max(N \ S).
  Rational dual(AgentSet s) const;

  bool has_alternatives() const { return !std::holds_alternative<Table>(backing_); }
  // Lowest-index maximizer (general) or lexicographically smallest optimal
  // assignment (matching). A matching result lists items for the members
  // of S in index order.
  AlternativeRef wmax_argmax(AgentSet s) const;
  // v_i(A) for every agent at a full alternative.
  RationalVector values_at(const AlternativeRef& alt) const;

  const Instance* general() const { return std::get_if<Instance>(&backing_); }
  const MatchingInstance* matching() const {
    return std::get_if<MatchingInstance>(&backing_);
  }
  const std::vector<std::string>& agent_labels() const;

 private:
  struct Table {
    RationalVector values;
  };
  struct Memo;

  Rational compute(AgentSet s) const;

  std::size_t n_ = 0;
  std::variant<Instance, MatchingInstance, Table> backing_;
  std::shared_ptr<Memo> memo_;
  std::vector<std::string> labels_;
};

// sum_{i in S} d_i.
Rational wpi(const DisagreementPoint& d, AgentSet s);

struct SubmodularityVerdict {
  bool submodular = true;
  // On failure f(S) + f(T) < f(S & T) + f(S | T).
  AgentSet s;
  AgentSet t;
  explicit operator bool() const { return submodular; }
};

// Exhaustive marginal test over pairs i < j and S within N \ {i, j};
// the witness is S+i, S+j.
SubmodularityVerdict is_submodular(const SetFunctionOracle& o,
                                   const Limits& limits = Limits::from_env());

}  // namespace wshare

#endif  // WSHARE_WELFARE_HPP_
