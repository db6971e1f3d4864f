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

#include "wshare/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace wshare {
namespace {

// Compact tableau: basic[r] = rhs[r] - sum_c a[r][c] * nonbasic[c], and
// z = z0 + sum_c d[c] * nonbasic[c] is maximized.
class Tableau {
 public:
  std::vector<RationalVector> a;
  RationalVector rhs;
  RationalVector d;
  Rational z0;
  std::vector<std::size_t> basic;     // variable id per row
  std::vector<std::size_t> nonbasic;  // variable id per column
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    const std::size_t cols = nonbasic.size();
    const Rational inv = Rational(1) / a[r][c];
    RationalVector& prow = a[r];
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != c && !prow[k].is_zero()) prow[k] *= inv;
    }
    prow[c] = inv;
    rhs[r] *= inv;

    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != c && !prow[k].is_zero()) support.push_back(k);
    }
    for (std::size_t r2 = 0; r2 < a.size(); ++r2) {
      if (r2 == r || a[r2][c].is_zero()) continue;
      const Rational f = a[r2][c];
      RationalVector& row = a[r2];
      for (std::size_t k : support) row[k].sub_mul(f, prow[k]);
      row[c] = -f * inv;
      rhs[r2].sub_mul(f, rhs[r]);
    }
    if (!d[c].is_zero()) {
      const Rational f = d[c];
      for (std::size_t k : support) d[k].sub_mul(f, prow[k]);
      d[c] = -f * inv;
      z0.add_mul(f, rhs[r]);
    }
    std::swap(basic[r], nonbasic[c]);
  }

  // Runs Bland pivots until optimal (true) or unbounded (false).
  bool optimize() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < nonbasic.size(); ++c) {
        if (d[c].sign() > 0 && (!enter || nonbasic[c] < nonbasic[*enter])) {
          enter = c;
        }
      }
      if (!enter) return true;
      const std::size_t c = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r][c].sign() <= 0) continue;
        Rational ratio = rhs[r] / a[r][c];
        if (!leave || ratio < best ||
            (ratio == best && basic[r] < basic[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

  void drop_column(std::size_t c) {
    for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(c));
    nonbasic.erase(nonbasic.begin() + static_cast<std::ptrdiff_t>(c));
  }

  void drop_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basic.erase(basic.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

}  // namespace

LinearProgram::LinearProgram(std::size_t variables)
    : n_(variables), objective_(variables), free_(variables, false) {}

void LinearProgram::set_objective(RationalVector coefficients, Sense sense) {
  if (coefficients.size() != n_) {
    throw std::invalid_argument("objective length differs from variables");
  }
  objective_ = std::move(coefficients);
  sense_ = sense;
}

void LinearProgram::add_constraint(RationalVector row, Relation relation,
                                   Rational rhs) {
  if (row.size() != n_) {
    throw std::invalid_argument("constraint length differs from variables");
  }
  constraints_.push_back(Constraint{std::move(row), relation, std::move(rhs)});
}

void LinearProgram::set_free(std::size_t variable) {
  free_.at(variable) = true;
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LpResult simplex_solve(const LinearProgram& lp) {
  // Structural columns: one per variable, plus a negative part for each
  // free variable.
  std::vector<std::size_t> neg_col(lp.variables(), 0);
  std::size_t n_struct = lp.variables();
  for (std::size_t v = 0; v < lp.variables(); ++v) {
    if (lp.is_free(v)) neg_col[v] = n_struct++;
  }
  const std::size_t m = lp.constraints().size();
  const std::size_t slack_base = n_struct;
  const std::size_t art_base = n_struct + m;

  Tableau t;
  t.nonbasic.reserve(n_struct + m);
  for (std::size_t k = 0; k < n_struct; ++k) t.nonbasic.push_back(k);
  std::vector<std::size_t> surplus_rows;
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& con = lp.constraints()[r];
    const bool flip = con.rhs.sign() < 0;
    Relation rel = con.relation;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    if (rel == Relation::kGreaterEqual) surplus_rows.push_back(r);
  }
  for (std::size_t r : surplus_rows) t.nonbasic.push_back(slack_base + r);

  const std::size_t cols = t.nonbasic.size();
  t.a.assign(m, RationalVector(cols));
  t.rhs.resize(m);
  t.basic.resize(m);
  t.d.assign(cols, Rational(0));
  std::vector<char> artificial_row(m, 0);
  std::size_t surplus_col = n_struct;
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& con = lp.constraints()[r];
    const bool flip = con.rhs.sign() < 0;
    Relation rel = con.relation;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    for (std::size_t v = 0; v < lp.variables(); ++v) {
      if (con.row[v].is_zero()) continue;
      const Rational coef = flip ? -con.row[v] : con.row[v];
      t.a[r][v] = coef;
      if (lp.is_free(v)) t.a[r][neg_col[v]] = -coef;
    }
    t.rhs[r] = flip ? -con.rhs : con.rhs;
    if (rel == Relation::kLessEqual) {
      t.basic[r] = slack_base + r;
    } else {
      if (rel == Relation::kGreaterEqual) t.a[r][surplus_col++] = Rational(-1);
      t.basic[r] = art_base + r;
      artificial_row[r] = 1;
    }
  }

  LpResult result;
  // Phase 1: maximize minus the sum of artificials.
  bool any_artificial = false;
  for (std::size_t r = 0; r < m; ++r) {
    if (!artificial_row[r]) continue;
    any_artificial = true;
    t.z0 -= t.rhs[r];
    for (std::size_t c = 0; c < cols; ++c) {
      if (!t.a[r][c].is_zero()) t.d[c] += t.a[r][c];
    }
  }
  if (any_artificial) {
    t.optimize();
    if (t.z0.sign() < 0) {
      result.status = LpStatus::kInfeasible;
      result.pivots = t.pivots;
      return result;
    }
    // Drive zero-level artificials out of the basis.
    for (std::size_t r = 0; r < t.basic.size();) {
      if (t.basic[r] < art_base) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < t.nonbasic.size(); ++c) {
        if (t.nonbasic[c] < art_base && !t.a[r][c].is_zero()) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
    for (std::size_t c = t.nonbasic.size(); c-- > 0;) {
      if (t.nonbasic[c] >= art_base) t.drop_column(c);
    }
  }

  // Phase 2 objective in terms of the current nonbasic columns.
  RationalVector cost(n_struct);
  const bool minimize = lp.sense() == Sense::kMinimize;
  for (std::size_t v = 0; v < lp.variables(); ++v) {
    const Rational c = minimize ? -lp.objective()[v] : lp.objective()[v];
    cost[v] = c;
    if (lp.is_free(v)) cost[neg_col[v]] = -c;
  }
  t.z0 = Rational(0);
  t.d.assign(t.nonbasic.size(), Rational(0));
  for (std::size_t c = 0; c < t.nonbasic.size(); ++c) {
    if (t.nonbasic[c] < n_struct) t.d[c] = cost[t.nonbasic[c]];
  }
  for (std::size_t r = 0; r < t.basic.size(); ++r) {
    if (t.basic[r] >= n_struct || cost[t.basic[r]].is_zero()) continue;
    const Rational& cb = cost[t.basic[r]];
    t.z0.add_mul(cb, t.rhs[r]);
    for (std::size_t c = 0; c < t.nonbasic.size(); ++c) {
      if (!t.a[r][c].is_zero()) t.d[c].sub_mul(cb, t.a[r][c]);
    }
  }
  const bool bounded = t.optimize();
  result.pivots = t.pivots;
  if (!bounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  RationalVector structural(n_struct);
  for (std::size_t r = 0; r < t.basic.size(); ++r) {
    if (t.basic[r] < n_struct) structural[t.basic[r]] = t.rhs[r];
  }
  result.point.resize(lp.variables());
  for (std::size_t v = 0; v < lp.variables(); ++v) {
    result.point[v] = structural[v];
    if (lp.is_free(v)) result.point[v] -= structural[neg_col[v]];
  }
  result.status = LpStatus::kOptimal;
  result.value = minimize ? -t.z0 : t.z0;
  return result;
}

bool is_feasible(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.variables()) return false;
  for (std::size_t v = 0; v < lp.variables(); ++v) {
    if (!lp.is_free(v) && x[v].sign() < 0) return false;
  }
  for (const Constraint& con : lp.constraints()) {
    Rational lhs;
    for (std::size_t v = 0; v < lp.variables(); ++v) {
      if (!con.row[v].is_zero()) lhs.add_mul(con.row[v], x[v]);
    }
    switch (con.relation) {
      case Relation::kLessEqual:
        if (lhs > con.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != con.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace wshare
