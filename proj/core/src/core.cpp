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

#include "wshare/core.hpp"

#include <stdexcept>

namespace wshare {
namespace {

void check_subset_bound(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.subset_agents) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.subset_agents));
  }
}

RationalVector indicator(AgentSet s, std::size_t n, std::size_t width) {
  RationalVector row(width);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.contains(i)) row[i] = Rational(1);
  }
  return row;
}

}  // namespace

AnticoreVerdict check_anticore(const SetFunctionOracle& o,
                               const RationalVector& u) {
  if (u.size() != o.n_agents()) {
    throw std::invalid_argument("utility vector length mismatch");
  }
  for (AgentSet s : subsets_by_size(o.all())) {
    Rational slack = o.wmax(s);
    for (std::size_t i : s.members()) slack -= u[i];
    if (slack.sign() < 0) return AnticoreVerdict{false, s, slack};
  }
  return AnticoreVerdict{};
}

DominationVerdict check_domination(const RationalVector& u,
                                   const DisagreementPoint& d) {
  if (u.size() != d.size()) {
    throw std::invalid_argument("utility vector length mismatch");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < d[i]) return DominationVerdict{false, i, d[i] - u[i]};
  }
  return DominationVerdict{};
}

RationalVector welfare_gap_table(const SetFunctionOracle& o,
                                 const DisagreementPoint& d) {
  if (d.size() != o.n_agents()) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  const std::size_t full = std::size_t{1} << o.n_agents();
  RationalVector f(full);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const AgentSet s(mask);
    f[mask] = o.wmax(s) - wpi(d, s);
  }
  return f;
}

LinearProgram ws_core_program(const SetFunctionOracle& o,
                              const DisagreementPoint& d,
                              std::size_t extra_variables) {
  const std::size_t n = o.n_agents();
  const RationalVector f = welfare_gap_table(o, d);
  LinearProgram lp(n + extra_variables);
  const std::size_t full = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const AgentSet s(mask);
    lp.add_constraint(indicator(s, n, n + extra_variables),
                      mask == full - 1 ? Relation::kEqual
                                       : Relation::kLessEqual,
                      f[mask]);
  }
  return lp;
}

CoreVerdict ws_core_nonempty(const SetFunctionOracle& o,
                             const DisagreementPoint& d,
                             const Limits& limits) {
  const std::size_t n = o.n_agents();
  check_subset_bound(n, limits, "WS-core test");
  const RationalVector f = welfare_gap_table(o, d);
  const std::size_t full = std::size_t{1} << n;

  CoreVerdict verdict;
  verdict.target = f[full - 1];
  LinearProgram lp(n);
  lp.set_objective(RationalVector(n, Rational(1)), Sense::kMaximize);
  for (std::size_t mask = 1; mask < full; ++mask) {
    lp.add_constraint(indicator(AgentSet(mask), n, n), Relation::kLessEqual,
                      f[mask]);
  }
  const LpResult r = simplex_solve(lp);
  if (r.status == LpStatus::kUnbounded) {
    throw std::logic_error("WS-core LP cannot be unbounded");
  }
  if (!r.optimal()) return verdict;
  verdict.optimum = r.value;
  if (r.value == verdict.target) {
    verdict.nonempty = true;
    verdict.witness.resize(n);
    for (std::size_t i = 0; i < n; ++i) verdict.witness[i] = r.point[i] + d[i];
  }
  return verdict;
}

std::string to_string(SufficientCondition c) {
  switch (c) {
    case SufficientCondition::kSubmodular: return "submodular";
    case SufficientCondition::kMonotoneGap: return "monotone_gap";
    case SufficientCondition::kNeither: return "neither";
  }
  return "neither";
}

SufficientConditions sufficient_conditions(const SetFunctionOracle& o,
                                           const DisagreementPoint& d,
                                           const Limits& limits) {
  const std::size_t n = o.n_agents();
  check_subset_bound(n, limits, "sufficient conditions");
  SufficientConditions out;
  out.submodular = is_submodular(o, limits).submodular;
  const RationalVector f = welfare_gap_table(o, d);
  out.monotone_gap = true;
  const std::size_t full = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < full && out.monotone_gap; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) continue;
      if (f[mask | (std::size_t{1} << i)] < f[mask]) {
        out.monotone_gap = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace wshare
