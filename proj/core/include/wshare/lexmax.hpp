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

#ifndef WSHARE_LEXMAX_HPP_
#define WSHARE_LEXMAX_HPP_

#include <vector>

#include "wshare/rational.hpp"
#include "wshare/simplex.hpp"

namespace wshare {

// coef . y + constant
struct AffineExpr {
  RationalVector coef;
  Rational constant;

  Rational eval(const RationalVector& y) const;
};

struct LexLevel {
  Rational level;
  std::vector<std::size_t> fixed;  // expressions pinned at this level
};

struct LexResult {
  RationalVector point;
  RationalVector values;  // expression values at `point`
  std::vector<LexLevel> levels;
  std::size_t lp_solves = 0;
};

// Lexicographic max-min of `exprs` over the feasible set of `base` (its
// objective is ignored). Each round maximizes the smallest unpinned
// expression, then probes every expression sitting at that level: it is
// pinned when it cannot rise above the level without pushing another
// unpinned expression below it. Throws if `base` is infeasible or the
// minimum is unbounded.
LexResult lex_maxmin(const LinearProgram& base,
                     const std::vector<AffineExpr>& exprs);

}  // namespace wshare

#endif  // WSHARE_LEXMAX_HPP_
