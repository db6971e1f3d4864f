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

#include "wshare/egalitarian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "wshare/core.hpp"

namespace wshare {
namespace {

void check_bound(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.subset_agents) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.subset_agents));
  }
}

std::optional<Solution> as_solution(const SetFunctionOracle& o,
                                    const RationalVector& u,
                                    const char* mechanism) {
  if (!o.has_alternatives()) return std::nullopt;
  const AlternativeRef alt = o.wmax_argmax(o.all());
  return Solution(alt, o.values_at(alt), u, mechanism);
}

}  // namespace

WaterFillingResult water_filling(const SetFunctionOracle& o,
                                 const DisagreementPoint& d,
                                 const Limits& limits) {
  const std::size_t n = o.n_agents();
  check_bound(n, limits, "water filling");
  if (d.size() != n) {
    throw std::invalid_argument("disagreement point length mismatch");
  }
  const std::size_t full = std::size_t{1} << n;
  RationalVector wmax(full);
  for (std::size_t mask = 1; mask < full; ++mask) {
    wmax[mask] = o.wmax(AgentSet(mask));
  }

  WaterFillingTrace trace;
  RationalVector u = d.utilities;
  RationalVector slack(full);  // W_max(S) - u(S)
  for (std::size_t mask = 1; mask < full; ++mask) {
    slack[mask] = wmax[mask] - wpi(d, AgentSet(mask));
  }
  AgentSet free_agents = o.all();

  for (std::size_t mask = 1; mask < full; ++mask) {
    if (slack[mask].sign() <= 0) {
      trace.initial_tight_sets.push_back(AgentSet(mask));
      trace.initially_locked = trace.initially_locked | AgentSet(mask);
    }
  }
  free_agents = free_agents - trace.initially_locked;

  while (!free_agents.empty()) {
    std::optional<Rational> step;
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::size_t k = (AgentSet(mask) & free_agents).size();
      if (k == 0) continue;
      Rational x = slack[mask] / Rational(static_cast<long>(k));
      if (!step || x < *step) step = std::move(x);
    }
    WaterFillingStep it;
    it.increment = *step;
    for (std::size_t i : free_agents.members()) u[i] += it.increment;
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::size_t k = (AgentSet(mask) & free_agents).size();
      if (k == 0) continue;
      slack[mask].sub_mul(Rational(static_cast<long>(k)), it.increment);
      if (slack[mask].is_zero()) {
        it.tight_sets.push_back(AgentSet(mask));
        it.newly_locked = it.newly_locked | (AgentSet(mask) & free_agents);
      }
    }
    free_agents = free_agents - it.newly_locked;
    trace.iterations.push_back(std::move(it));
  }

  trace.exhausted = sum(u) == wmax[full - 1];
  trace.final_utilities = u;
  WaterFillingResult out;
  if (trace.exhausted) out.solution = as_solution(o, u, "lexmax");
  out.trace = std::move(trace);
  return out;
}

LexmaxLpResult lexmax_lp_detail(const SetFunctionOracle& o,
                                const DisagreementPoint& d,
                                const Limits& limits) {
  const std::size_t n = o.n_agents();
  check_bound(n, limits, "lexmax LP");
  if (!ws_core_nonempty(o, d, limits)) {
    throw std::domain_error("WS-core is empty");
  }
  const LinearProgram core = ws_core_program(o, d);
  std::vector<AffineExpr> exprs(n);
  for (std::size_t i = 0; i < n; ++i) {
    exprs[i].coef.assign(n, Rational(0));
    exprs[i].coef[i] = Rational(1);
  }
  LexResult detail = lex_maxmin(core, exprs);
  RationalVector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = detail.values[i] + d[i];
  if (!o.has_alternatives()) {
    throw std::invalid_argument("lexmax LP needs an instance-backed oracle");
  }
  return LexmaxLpResult{*as_solution(o, u, "lexmax"), std::move(detail)};
}

Solution lexmax_lp(const SetFunctionOracle& o, const DisagreementPoint& d,
                   const Limits& limits) {
  return lexmax_lp_detail(o, d, limits).solution;
}

Rational sum_squares(const RationalVector& u) {
  Rational s;
  for (const auto& x : u) s.add_mul(x, x);
  return s;
}

std::string to_string(LorenzOrder o) {
  switch (o) {
    case LorenzOrder::kFirstDominates: return "first_dominates";
    case LorenzOrder::kSecondDominates: return "second_dominates";
    case LorenzOrder::kIncomparable: return "incomparable";
    case LorenzOrder::kEqual: return "equal";
  }
  return "incomparable";
}

LorenzOrder lorenz_compare(const RationalVector& u, const RationalVector& w) {
  if (u.size() != w.size() || sum(u) != sum(w)) {
    throw std::invalid_argument("Lorenz comparison needs equal totals");
  }
  RationalVector a = u;
  RationalVector b = w;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  bool a_above = false;
  bool b_above = false;
  Rational pa, pb;
  for (std::size_t k = 0; k < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    if (pa > pb) a_above = true;
    if (pb > pa) b_above = true;
  }
  if (a_above && b_above) return LorenzOrder::kIncomparable;
  if (a_above) return LorenzOrder::kFirstDominates;
  if (b_above) return LorenzOrder::kSecondDominates;
  return LorenzOrder::kEqual;
}

std::vector<double> min_square_diag(const SetFunctionOracle& o,
                                    const DisagreementPoint& d, double tol,
                                    std::size_t max_sweeps) {
  const std::size_t n = o.n_agents();
  if (!ws_core_nonempty(o, d)) throw std::domain_error("WS-core is empty");
  const RationalVector f_exact = welfare_gap_table(o, d);
  const std::size_t full = std::size_t{1} << n;
  std::vector<double> f(full);
  for (std::size_t mask = 1; mask < full; ++mask) {
    f[mask] = f_exact[mask].to_double();
  }

  // Half-spaces: x_i >= 0 and x(S) <= f(S) for S != N; one hyperplane
  // x(N) = f(N). Dykstra keeps one correction vector per half-space.
  struct HalfSpace {
    std::uint64_t mask;
    bool lower;  // x_i >= 0 when true
  };
  std::vector<HalfSpace> spaces;
  for (std::size_t i = 0; i < n; ++i) spaces.push_back({1ULL << i, true});
  for (std::size_t mask = 1; mask + 1 < full; ++mask) {
    spaces.push_back({mask, false});
  }
  std::vector<std::vector<double>> corr(spaces.size(),
                                        std::vector<double>(n, 0.0));
  std::vector<double> x(n, 0.0);
  const double target = f[full - 1];

  auto max_violation = [&](const std::vector<double>& y) {
    double v = std::abs(std::accumulate(y.begin(), y.end(), 0.0) - target);
    for (const auto& h : spaces) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((h.mask >> i) & 1ULL) s += y[i];
      }
      v = std::max(v, h.lower ? -s : s - f[h.mask]);
    }
    return v;
  };

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    const std::vector<double> before = x;
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      const HalfSpace& h = spaces[k];
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + corr[k][i];
      const std::size_t size = static_cast<std::size_t>(std::popcount(h.mask));
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((h.mask >> i) & 1ULL) s += y[i];
      }
      const double excess = h.lower ? -s : s - f[h.mask];
      std::vector<double> p = y;
      if (excess > 0) {
        const double shift = excess / static_cast<double>(size);
        for (std::size_t i = 0; i < n; ++i) {
          if ((h.mask >> i) & 1ULL) p[i] += h.lower ? shift : -shift;
        }
      }
      for (std::size_t i = 0; i < n; ++i) corr[k][i] = y[i] - p[i];
      x = std::move(p);
    }
    const double shift =
        (target - std::accumulate(x.begin(), x.end(), 0.0)) /
        static_cast<double>(n);
    for (auto& xi : x) xi += shift;

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      change = std::max(change, std::abs(x[i] - before[i]));
    }
    if (change < tol * 1e-3 && max_violation(x) < tol) {
      std::vector<double> u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = x[i] + d[i].to_double();
      return u;
    }
  }
  throw std::runtime_error("min-square diagnostic did not converge");
}

}  // namespace wshare
