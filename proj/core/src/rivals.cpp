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

#include "wshare/rivals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wshare/core.hpp"

namespace wshare {
namespace {

Solution make_solution(const SetFunctionOracle& o, const RationalVector& u,
                       const char* mechanism) {
  if (!o.has_alternatives()) {
    throw std::invalid_argument(std::string(mechanism) +
                                " needs an instance-backed oracle");
  }
  const AlternativeRef alt = o.wmax_argmax(o.all());
  return Solution(alt, o.values_at(alt), u, mechanism);
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= Rational(static_cast<long>(k));
  return f;
}

}  // namespace

Solution shapley(const SetFunctionOracle& o, const Limits& limits) {
  const std::size_t n = o.n_agents();
  if (n > limits.subset_agents) {
    throw BoundExceeded("Shapley value: " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.subset_agents));
  }
  // weight[s] = s! (n-1-s)! / n!
  RationalVector weight(n);
  const Rational nf = factorial(n);
  for (std::size_t s = 0; s < n; ++s) {
    weight[s] = factorial(s) * factorial(n - 1 - s) / nf;
  }
  RationalVector phi(n);
  const std::uint64_t full = o.all().bits();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t rest = full & ~(1ULL << i);
    std::uint64_t sub = 0;
    while (true) {
      const AgentSet s(sub);
      const Rational marginal = o.wmax(s.with(i)) - o.wmax(s);
      phi[i].add_mul(weight[s.size()], marginal);
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
  }
  return make_solution(o, phi, "shapley");
}

RationalVector shapley_by_permutations(const SetFunctionOracle& o,
                                       const Limits& limits) {
  const std::size_t n = o.n_agents();
  if (n > limits.permutation_agents) {
    throw BoundExceeded("Shapley permutation enumeration: " +
                        std::to_string(n) + " agents exceeds bound " +
                        std::to_string(limits.permutation_agents));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  RationalVector total(n);
  std::size_t count = 0;
  do {
    AgentSet before;
    for (std::size_t i : order) {
      total[i] += o.wmax(before.with(i)) - o.wmax(before);
      before = before.with(i);
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& t : total) t /= Rational(static_cast<long>(count));
  return total;
}

EfResult ef_maxmin_detail(const MatchingInstance& m) {
  if (!m.square()) {
    throw std::invalid_argument("envy-free pricing needs a square instance");
  }
  const std::size_t n = m.n_agents();
  const SetFunctionOracle o(m);
  const auto sigma = std::get<Assignment>(o.wmax_argmax(o.all()));

  // Variables: q_j per item, free, summing to zero.
  LinearProgram lp(n);
  for (std::size_t j = 0; j < n; ++j) lp.set_free(j);
  lp.add_constraint(RationalVector(n, Rational(1)), Relation::kEqual,
                    Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == sigma[i]) continue;
      // v_i(s) + q_s >= v_i(j) + q_j
      RationalVector row(n);
      row[sigma[i]] = Rational(1);
      row[j] = Rational(-1);
      lp.add_constraint(std::move(row), Relation::kGreaterEqual,
                        m.value(i, j) - m.value(i, sigma[i]));
    }
  }
  std::vector<AffineExpr> utility(n);
  for (std::size_t i = 0; i < n; ++i) {
    utility[i].coef.assign(n, Rational(0));
    utility[i].coef[sigma[i]] = Rational(1);
    utility[i].constant = m.value(i, sigma[i]);
  }
  LexResult detail = lex_maxmin(lp, utility);
  Solution sol(sigma, m.values_of(sigma), detail.values, "ef-maxmin");
  return EfResult{std::move(sol), detail.point, std::move(detail)};
}

Solution ef_maxmin(const MatchingInstance& m) {
  return ef_maxmin_detail(m).solution;
}

Solution ks_bargaining(const SetFunctionOracle& o, const DisagreementPoint& d) {
  const std::size_t n = o.n_agents();
  if (d.size() != n) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  RationalVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = o.wmax(AgentSet::singleton(i));
  const Rational span = sum(b) - sum(d.utilities);
  RationalVector u = d.utilities;
  if (!span.is_zero()) {
    const Rational t = (o.wmax(o.all()) - sum(d.utilities)) / span;
    for (std::size_t i = 0; i < n; ++i) u[i].add_mul(t, b[i] - d[i]);
  }
  return make_solution(o, u, "ks");
}

Solution nash_bargaining(const SetFunctionOracle& o,
                         const DisagreementPoint& d) {
  const std::size_t n = o.n_agents();
  if (d.size() != n) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  const Rational share =
      (o.wmax(o.all()) - sum(d.utilities)) / Rational(static_cast<long>(n));
  RationalVector u = d.utilities;
  for (auto& x : u) x += share;
  return make_solution(o, u, "nash");
}

NucleolusResult nucleolus_ws_detail(const SetFunctionOracle& o,
                                    const DisagreementPoint& d,
                                    const Limits& limits) {
  const std::size_t n = o.n_agents();
  if (!ws_core_nonempty(o, d, limits)) {
    throw std::domain_error("WS-core is empty");
  }
  LinearProgram lp(n);
  for (std::size_t i = 0; i < n; ++i) lp.set_free(i);
  lp.add_constraint(RationalVector(n, Rational(1)), Relation::kEqual,
                    o.wmax(o.all()));
  std::vector<AffineExpr> excess;
  const std::uint64_t full = o.all().bits();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const AgentSet s(mask);
    AffineExpr e;
    e.coef.assign(n, Rational(0));
    for (std::size_t i : s.members()) e.coef[i] = Rational(1);
    e.constant = -max(o.dual(s), wpi(d, s));
    excess.push_back(std::move(e));
  }
  LexResult detail = lex_maxmin(lp, excess);
  return NucleolusResult{make_solution(o, detail.point, "nucleolus-ws"),
                         std::move(detail)};
}

Solution nucleolus_ws(const SetFunctionOracle& o, const DisagreementPoint& d,
                      const Limits& limits) {
  return nucleolus_ws_detail(o, d, limits).solution;
}

}  // namespace wshare
