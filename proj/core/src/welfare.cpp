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

#include <mutex>
#include <stdexcept>

#include "wshare/matching.hpp"

namespace wshare {

namespace {
constexpr std::size_t kMemoAgents = 22;
}  // namespace

struct SetFunctionOracle::Memo {
  std::mutex mu;
  RationalVector values;
  std::vector<char> known;
};

SetFunctionOracle::SetFunctionOracle(Instance inst)
    : n_(inst.n_agents()), backing_(std::move(inst)) {
  labels_ = std::get<Instance>(backing_).agents();
  if (n_ > AgentSet::kMaxAgents) throw BoundExceeded("too many agents");
  if (n_ <= kMemoAgents) {
    memo_ = std::make_shared<Memo>();
    memo_->values.resize(std::size_t{1} << n_);
    memo_->known.assign(std::size_t{1} << n_, 0);
  }
}

SetFunctionOracle::SetFunctionOracle(MatchingInstance m)
    : n_(m.n_agents()), backing_(std::move(m)) {
  labels_ = std::get<MatchingInstance>(backing_).agents();
  if (n_ > AgentSet::kMaxAgents) throw BoundExceeded("too many agents");
  if (n_ <= kMemoAgents) {
    memo_ = std::make_shared<Memo>();
    memo_->values.resize(std::size_t{1} << n_);
    memo_->known.assign(std::size_t{1} << n_, 0);
  }
}

SetFunctionOracle SetFunctionOracle::from_table(std::size_t n_agents,
                                                RationalVector table) {
  if (n_agents > kMemoAgents) throw BoundExceeded("table too large");
  if (table.size() != (std::size_t{1} << n_agents)) {
    throw std::invalid_argument("table must have 2^n entries");
  }
  if (!table[0].is_zero()) {
    throw std::invalid_argument("table entry for the empty set must be 0");
  }
  SetFunctionOracle o(Instance({"1"}, {"a"}, {{0}}));
  o.n_ = n_agents;
  o.backing_ = Table{std::move(table)};
  o.memo_.reset();
  o.labels_.clear();
  for (std::size_t i = 1; i <= n_agents; ++i) {
    o.labels_.push_back(std::to_string(i));
  }
  return o;
}

const std::vector<std::string>& SetFunctionOracle::agent_labels() const {
  return labels_;
}

Rational SetFunctionOracle::compute(AgentSet s) const {
  if (s.empty()) return Rational(0);
  if (const auto* t = std::get_if<Table>(&backing_)) {
    return t->values[s.bits()];
  }
  const std::vector<std::size_t> members = s.members();
  if (const auto* inst = std::get_if<Instance>(&backing_)) {
    std::optional<Rational> best;
    for (std::size_t a = 0; a < inst->n_alternatives(); ++a) {
      Rational total;
      for (std::size_t i : members) total += inst->value(i, a);
      if (!best || *best < total) best = std::move(total);
    }
    return *best;
  }
  const auto& m = std::get<MatchingInstance>(backing_);
  RationalMatrix w;
  w.reserve(members.size());
  for (std::size_t i : members) w.push_back(m.values()[i]);
  return max_weight_matching(w).value;
}

Rational SetFunctionOracle::wmax(AgentSet s) const {
  if (!s.subset_of(all())) throw std::out_of_range("subset outside agents");
  if (!memo_) return compute(s);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (memo_->known[s.bits()]) return memo_->values[s.bits()];
  }
  Rational v = compute(s);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->values[s.bits()] = v;
  memo_->known[s.bits()] = 1;
  return v;
}

Rational SetFunctionOracle::dual(AgentSet s) const {
  return wmax(all()) - wmax(all() - s);
}

AlternativeRef SetFunctionOracle::wmax_argmax(AgentSet s) const {
  if (const auto* inst = std::get_if<Instance>(&backing_)) {
    const std::vector<std::size_t> members = s.members();
    std::size_t best_alt = 0;
    std::optional<Rational> best;
    for (std::size_t a = 0; a < inst->n_alternatives(); ++a) {
      Rational total;
      for (std::size_t i : members) total += inst->value(i, a);
      if (!best || *best < total) {
        best = std::move(total);
        best_alt = a;
      }
    }
    return best_alt;
  }
  if (const auto* m = std::get_if<MatchingInstance>(&backing_)) {
    RationalMatrix w;
    for (std::size_t i : s.members()) w.push_back(m->values()[i]);
    return lex_first_max_weight_matching(w).assignment;
  }
  throw std::logic_error("explicit-table oracle has no alternatives");
}

RationalVector SetFunctionOracle::values_at(const AlternativeRef& alt) const {
  if (const auto* inst = std::get_if<Instance>(&backing_)) {
    return inst->column(std::get<std::size_t>(alt));
  }
  if (const auto* m = std::get_if<MatchingInstance>(&backing_)) {
    const auto& a = std::get<Assignment>(alt);
    if (a.size() != n_) throw std::invalid_argument("partial assignment");
    return m->values_of(a);
  }
  throw std::logic_error("explicit-table oracle has no alternatives");
}

Rational wpi(const DisagreementPoint& d, AgentSet s) {
  Rational total;
  for (std::size_t i : s.members()) total += d.utilities.at(i);
  return total;
}

SubmodularityVerdict is_submodular(const SetFunctionOracle& o,
                                   const Limits& limits) {
  const std::size_t n = o.n_agents();
  if (n > limits.subset_agents) {
    throw BoundExceeded("submodularity check: " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.subset_agents));
  }
  const AgentSet everyone = o.all();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const AgentSet rest = everyone.without(i).without(j);
      // Submasks of `rest` in increasing numeric order.
      std::uint64_t sub = 0;
      while (true) {
        const AgentSet s(sub);
        const Rational lhs = o.wmax(s.with(i)) + o.wmax(s.with(j));
        const Rational rhs = o.wmax(s) + o.wmax(s.with(i).with(j));
        if (lhs < rhs) return SubmodularityVerdict{false, s.with(i), s.with(j)};
        if (sub == rest.bits()) break;
        sub = (sub - rest.bits()) & rest.bits();
      }
    }
  }
  return SubmodularityVerdict{};
}

}  // namespace wshare
