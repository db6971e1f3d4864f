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

#include "wshare/matching.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace wshare {
namespace {

// Shortest augmenting path Hungarian method on costs c (n rows <= m cols),
// 1-based potentials. Minimizes total cost.
Assignment hungarian_min(const RationalMatrix& c) {
  const std::size_t n = c.size();
  const std::size_t m = n == 0 ? 0 : c[0].size();
  Assignment out(n);
  if (n == 0) return out;

  Rational inf(1);
  for (const auto& row : c) {
    for (const auto& x : row) inf += abs(x);
  }
  inf *= Rational(2);

  std::vector<Rational> u(n + 1), v(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  std::vector<Rational> minv(m + 1);
  std::vector<char> used(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      Rational delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Rational cur = c[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) out[p[j] - 1] = j - 1;
  }
  return out;
}

void check_shape(const RationalMatrix& w) {
  if (w.empty()) return;
  const std::size_t m = w[0].size();
  for (const auto& row : w) {
    if (row.size() != m) throw std::invalid_argument("ragged weight matrix");
  }
  if (w.size() > m) {
    throw std::invalid_argument("matching needs at least as many columns");
  }
}

}  // namespace

MatchingResult max_weight_matching(const RationalMatrix& w) {
  check_shape(w);
  RationalMatrix cost = w;
  for (auto& row : cost) {
    for (auto& x : row) x = -x;
  }
  MatchingResult r;
  r.assignment = hungarian_min(cost);
  for (std::size_t i = 0; i < w.size(); ++i) r.value += w[i][r.assignment[i]];
  return r;
}

MatchingResult lex_first_max_weight_matching(const RationalMatrix& w) {
  check_shape(w);
  const std::size_t n = w.size();
  MatchingResult best = max_weight_matching(w);
  if (n == 0) return best;
  const std::size_t m = w[0].size();

  // Fix rows one at a time to the lowest column that keeps the optimum.
  std::vector<char> taken(m, 0);
  Rational fixed_value;
  Assignment out(n);
  for (std::size_t r = 0; r < n; ++r) {
    bool placed = false;
    for (std::size_t j = 0; j < m && !placed; ++j) {
      if (taken[j]) continue;
      RationalMatrix rest;
      for (std::size_t r2 = r + 1; r2 < n; ++r2) {
        RationalVector row;
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          if (!taken[j2] && j2 != j) row.push_back(w[r2][j2]);
        }
        rest.push_back(std::move(row));
      }
      const Rational tail = rest.empty() ? Rational(0)
                                         : max_weight_matching(rest).value;
      if (fixed_value + w[r][j] + tail == best.value) {
        out[r] = j;
        taken[j] = 1;
        fixed_value += w[r][j];
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("lexicographic matching failed");
  }
  return MatchingResult{best.value, out};
}

std::optional<Assignment> match_rows(const std::vector<std::uint64_t>& allowed) {
  const std::size_t n = allowed.size();
  std::vector<int> owner(64, -1);
  std::function<bool(std::size_t, std::uint64_t&)> augment =
      [&](std::size_t r, std::uint64_t& seen) -> bool {
    for (std::uint64_t b = allowed[r] & ~seen; b != 0; b &= b - 1) {
      const int j = std::countr_zero(b);
      if ((seen >> j) & 1ULL) continue;
      seen |= 1ULL << j;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t seen = 0;
    if (!augment(r, seen)) return std::nullopt;
  }
  Assignment out(n);
  for (std::size_t j = 0; j < 64; ++j) {
    if (owner[j] >= 0) out[static_cast<std::size_t>(owner[j])] = j;
  }
  return out;
}

std::optional<Assignment> lex_first_match_rows(
    const std::vector<std::uint64_t>& allowed) {
  if (!match_rows(allowed)) return std::nullopt;
  std::vector<std::uint64_t> work = allowed;
  Assignment out(work.size());
  std::uint64_t taken = 0;
  for (std::size_t r = 0; r < work.size(); ++r) {
    for (std::uint64_t b = allowed[r] & ~taken; b != 0; b &= b - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(b));
      std::vector<std::uint64_t> rest(work.begin() + r + 1, work.end());
      for (auto& a : rest) a &= ~(taken | (1ULL << j));
      if (match_rows(rest)) {
        out[r] = j;
        taken |= 1ULL << j;
        break;
      }
    }
  }
  return out;
}

}  // namespace wshare
