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

#include "wshare/lexmax.hpp"

#include <stdexcept>

namespace wshare {
namespace {

// Copy of `base` with `extra` trailing zero columns.
LinearProgram widen(const LinearProgram& base, std::size_t extra) {
  const std::size_t n = base.variables();
  LinearProgram lp(n + extra);
  for (std::size_t v = 0; v < n; ++v) {
    if (base.is_free(v)) lp.set_free(v);
  }
  for (const Constraint& c : base.constraints()) {
    RationalVector row = c.row;
    row.resize(n + extra);
    lp.add_constraint(std::move(row), c.relation, c.rhs);
  }
  return lp;
}

void pin(LinearProgram& lp, const AffineExpr& e, const Rational& value,
         Relation relation) {
  RationalVector row = e.coef;
  row.resize(lp.variables());
  lp.add_constraint(std::move(row), relation, value - e.constant);
}

}  // namespace

Rational AffineExpr::eval(const RationalVector& y) const {
  Rational v = constant;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    if (!coef[k].is_zero()) v.add_mul(coef[k], y[k]);
  }
  return v;
}

LexResult lex_maxmin(const LinearProgram& base,
                     const std::vector<AffineExpr>& exprs) {
  const std::size_t n = base.variables();
  for (const auto& e : exprs) {
    if (e.coef.size() != n) {
      throw std::invalid_argument("expression length differs from variables");
    }
  }
  LexResult out;
  std::vector<char> pinned(exprs.size(), 0);
  RationalVector pinned_value(exprs.size());
  std::size_t remaining = exprs.size();

  auto with_pins = [&](std::size_t extra) {
    LinearProgram lp = widen(base, extra);
    for (std::size_t k = 0; k < exprs.size(); ++k) {
      if (pinned[k]) pin(lp, exprs[k], pinned_value[k], Relation::kEqual);
    }
    return lp;
  };

  while (remaining > 0) {
    // max t  s.t.  e_k(y) - t >= 0 for every unpinned k.
    LinearProgram lp = with_pins(1);
    lp.set_free(n);
    for (std::size_t k = 0; k < exprs.size(); ++k) {
      if (pinned[k]) continue;
      RationalVector row = exprs[k].coef;
      row.push_back(Rational(-1));
      lp.add_constraint(std::move(row), Relation::kGreaterEqual,
                        -exprs[k].constant);
    }
    RationalVector objective(n + 1);
    objective[n] = Rational(1);
    lp.set_objective(std::move(objective), Sense::kMaximize);
    const LpResult top = simplex_solve(lp);
    ++out.lp_solves;
    if (top.status == LpStatus::kInfeasible) {
      throw std::invalid_argument("lexicographic max-min: infeasible program");
    }
    if (top.status == LpStatus::kUnbounded) {
      throw std::invalid_argument("lexicographic max-min: unbounded minimum");
    }
    const Rational level = top.value;
    out.point.assign(top.point.begin(), top.point.begin() + static_cast<std::ptrdiff_t>(n));

    std::vector<char> may_rise(exprs.size(), 0);
    auto note_rises = [&](const RationalVector& y) {
      for (std::size_t k = 0; k < exprs.size(); ++k) {
        if (!pinned[k] && exprs[k].eval(y) > level) may_rise[k] = 1;
      }
    };
    note_rises(out.point);

    LexLevel record{level, {}};
    for (std::size_t k = 0; k < exprs.size(); ++k) {
      if (pinned[k] || may_rise[k]) continue;
      LinearProgram probe = with_pins(0);
      for (std::size_t j = 0; j < exprs.size(); ++j) {
        if (!pinned[j]) pin(probe, exprs[j], level, Relation::kGreaterEqual);
      }
      probe.set_objective(exprs[k].coef, Sense::kMaximize);
      const LpResult r = simplex_solve(probe);
      ++out.lp_solves;
      if (r.status == LpStatus::kUnbounded) {
        may_rise[k] = 1;
        continue;
      }
      if (!r.optimal()) throw std::logic_error("probe LP lost feasibility");
      note_rises(r.point);
      if (r.value + exprs[k].constant == level) record.fixed.push_back(k);
    }
    if (record.fixed.empty()) {
      throw std::logic_error("lexicographic max-min made no progress");
    }
    for (std::size_t k : record.fixed) {
      pinned[k] = 1;
      pinned_value[k] = level;
      --remaining;
    }
    out.levels.push_back(std::move(record));
  }

  if (exprs.empty()) {
    LinearProgram lp = widen(base, 0);
    const LpResult r = simplex_solve(lp);
    ++out.lp_solves;
    if (!r.optimal()) {
      throw std::invalid_argument("lexicographic max-min: infeasible program");
    }
    out.point = r.point;
  }
  // Otherwise the last max-min point already meets every pin: expressions
  // pinned in the final round cannot exceed the level there.
  out.values.reserve(exprs.size());
  for (const auto& e : exprs) out.values.push_back(e.eval(out.point));
  return out;
}

}  // namespace wshare
