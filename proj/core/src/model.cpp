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

#include "wshare/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace wshare {
namespace {

void check_matrix(const RationalMatrix& values, std::size_t rows,
                  std::size_t cols, const char* what) {
  if (rows == 0) throw std::invalid_argument(std::string(what) + ": no agents");
  if (cols == 0) {
    throw std::invalid_argument(std::string(what) + ": no columns");
  }
  if (values.size() != rows) {
    throw std::invalid_argument(std::string(what) +
                                ": row count differs from agent count");
  }
  for (const auto& row : values) {
    if (row.size() != cols) {
      throw std::invalid_argument(std::string(what) +
                                  ": values matrix is not rectangular");
    }
  }
}

void extend_assignments(std::size_t agent, std::size_t n_agents,
                        std::size_t n_items, std::vector<bool>& used,
                        Assignment& current, std::vector<Assignment>& out) {
  if (agent == n_agents) {
    out.push_back(current);
    return;
  }
  for (std::size_t j = 0; j < n_items; ++j) {
    if (used[j]) continue;
    used[j] = true;
    current[agent] = j;
    extend_assignments(agent + 1, n_agents, n_items, used, current, out);
    used[j] = false;
  }
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long parsed = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return parsed;
}

}  // namespace

AgentSet AgentSet::all(std::size_t n) {
  if (n > kMaxAgents) throw BoundExceeded("too many agents for a subset mask");
  return AgentSet(n == 0 ? 0 : (~0ULL >> (64 - n)));
}

AgentSet AgentSet::of(std::initializer_list<std::size_t> members) {
  AgentSet s;
  for (std::size_t i : members) s = s.with(i);
  return s;
}

std::vector<std::size_t> AgentSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string AgentSet::str(const std::vector<std::string>* labels) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members()) {
    if (!first) out += ",";
    first = false;
    out += labels ? (*labels)[i] : std::to_string(i + 1);
  }
  return out + "}";
}

std::vector<AgentSet> subsets_by_size(AgentSet universe) {
  const std::vector<std::size_t> elems = universe.members();
  const std::size_t n = elems.size();
  std::vector<AgentSet> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic k-combinations of positions.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      AgentSet s;
      for (std::size_t p : idx) s = s.with(elems[p]);
      out.push_back(s);
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

Instance::Instance(std::vector<std::string> agents,
                   std::vector<std::string> alternatives, RationalMatrix values)
    : agents_(std::move(agents)),
      alternatives_(std::move(alternatives)),
      values_(std::move(values)) {
  check_matrix(values_, agents_.size(), alternatives_.size(), "instance");
}

RationalVector Instance::column(std::size_t alt) const {
  RationalVector out(n_agents());
  for (std::size_t i = 0; i < n_agents(); ++i) out[i] = values_[i][alt];
  return out;
}

Instance Instance::restrict_agents(AgentSet s) const {
  std::vector<std::string> agents;
  RationalMatrix values;
  for (std::size_t i : s.members()) {
    agents.push_back(agents_.at(i));
    values.push_back(values_.at(i));
  }
  return Instance(std::move(agents), alternatives_, std::move(values));
}

MatchingInstance::MatchingInstance(std::vector<std::string> agents,
                                   std::vector<std::string> items,
                                   RationalMatrix values,
                                   std::optional<Rational> rent)
    : agents_(std::move(agents)),
      items_(std::move(items)),
      values_(std::move(values)),
      rent_(std::move(rent)) {
  check_matrix(values_, agents_.size(), items_.size(), "matching instance");
  if (items_.size() < agents_.size()) {
    throw std::invalid_argument("matching instance needs n_items >= n_agents");
  }
}

MatchingInstance MatchingInstance::restrict(AgentSet agents,
                                            AgentSet items) const {
  std::vector<std::string> a;
  std::vector<std::string> it;
  RationalMatrix values;
  const std::vector<std::size_t> cols = items.members();
  for (std::size_t j : cols) it.push_back(items_.at(j));
  for (std::size_t i : agents.members()) {
    a.push_back(agents_.at(i));
    RationalVector row;
    for (std::size_t j : cols) row.push_back(values_[i][j]);
    values.push_back(std::move(row));
  }
  return MatchingInstance(std::move(a), std::move(it), std::move(values));
}

RationalVector MatchingInstance::values_of(const Assignment& a) const {
  RationalVector out(n_agents());
  for (std::size_t i = 0; i < n_agents(); ++i) out[i] = values_[i][a.at(i)];
  return out;
}

std::vector<Assignment> enumerate_assignments(std::size_t n_agents,
                                              std::size_t n_items) {
  std::vector<Assignment> out;
  if (n_agents > n_items) return out;
  std::vector<bool> used(n_items, false);
  Assignment current(n_agents);
  extend_assignments(0, n_agents, n_items, used, current, out);
  return out;
}

Instance to_general(const MatchingInstance& m) {
  const std::vector<Assignment> all =
      enumerate_assignments(m.n_agents(), m.n_items());
  std::vector<std::string> labels;
  RationalMatrix values(m.n_agents());
  for (const Assignment& a : all) {
    labels.push_back(to_string(AlternativeRef(a), &m.items()));
    for (std::size_t i = 0; i < m.n_agents(); ++i) {
      values[i].push_back(m.value(i, a[i]));
    }
  }
  return Instance(m.agents(), std::move(labels), std::move(values));
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kUniform: return "uniform";
    case Provenance::kRpExact: return "rp";
    case Provenance::kRpMonteCarlo: return "rp-mc";
    case Provenance::kEating: return "eating";
    case Provenance::kExplicit: return "explicit";
  }
  return "explicit";
}

DisagreementPoint DisagreementPoint::zeros(std::size_t n) {
  return explicit_values(RationalVector(n));
}

DisagreementPoint DisagreementPoint::explicit_values(RationalVector u) {
  DisagreementPoint d;
  d.utilities = std::move(u);
  d.provenance = Provenance::kExplicit;
  return d;
}

std::string to_string(const AlternativeRef& alt,
                      const std::vector<std::string>* labels) {
  if (const auto* idx = std::get_if<std::size_t>(&alt)) {
    return labels ? (*labels)[*idx] : std::to_string(*idx);
  }
  const auto& a = std::get<Assignment>(alt);
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += "|";
    out += labels ? (*labels)[a[i]] : std::to_string(a[i]);
  }
  return out;
}

Solution::Solution(AlternativeRef alternative,
                   RationalVector values_at_alternative,
                   RationalVector utilities, std::string mechanism)
    : alternative_(std::move(alternative)),
      values_(std::move(values_at_alternative)),
      utilities_(std::move(utilities)),
      mechanism_(std::move(mechanism)) {
  if (values_.size() != utilities_.size()) {
    throw std::invalid_argument("solution: values/utilities length mismatch");
  }
  transfers_.resize(utilities_.size());
  Rational balance;
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    transfers_[i] = utilities_[i] - values_[i];
    balance += transfers_[i];
  }
  if (!balance.is_zero()) {
    throw std::logic_error(mechanism_ + ": transfers are not budget balanced (" +
                           balance.str() + ")");
  }
}

MatchingInstance apply_rent_shift(const MatchingInstance& m) {
  if (!m.rent()) return m;
  if (!m.square()) {
    throw std::invalid_argument("rent shift requires a square instance");
  }
  const Rational share = *m.rent() / Rational(static_cast<long>(m.n_agents()));
  RationalMatrix values = m.values();
  for (auto& row : values) {
    for (auto& v : row) v -= share;
  }
  return MatchingInstance(m.agents(), m.items(), std::move(values));
}

Instance normalize_to_disagreement(const Instance& inst,
                                   const DisagreementPoint& d) {
  if (d.size() != inst.n_agents()) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  RationalMatrix values = inst.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (auto& v : values[i]) v -= d[i];
  }
  return Instance(inst.agents(), inst.alternatives(), std::move(values));
}

MatchingInstance normalize_to_disagreement(const MatchingInstance& m,
                                           const DisagreementPoint& d) {
  if (d.size() != m.n_agents()) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  RationalMatrix values = m.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (auto& v : values[i]) v -= d[i];
  }
  return MatchingInstance(m.agents(), m.items(), std::move(values), m.rent());
}

Limits Limits::from_env() {
  Limits l;
  l.subset_agents = env_or("WSHARE_MAX_SUBSET_AGENTS", l.subset_agents);
  l.rp_agents = env_or("WSHARE_MAX_RP_AGENTS", l.rp_agents);
  l.pareto_agents = env_or("WSHARE_MAX_PARETO_AGENTS", l.pareto_agents);
  l.permutation_agents =
      env_or("WSHARE_MAX_PERMUTATION_AGENTS", l.permutation_agents);
  l.component_agents = env_or("WSHARE_MAX_COMPONENT_AGENTS", l.component_agents);
  return l;
}

}  // namespace wshare
