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

#ifndef WSHARE_SIMPLEX_HPP_
#define WSHARE_SIMPLEX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "wshare/rational.hpp"

namespace wshare {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct Constraint {
  RationalVector row;
  Relation relation;
  Rational rhs;
};

// Variables are nonnegative unless marked free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  void set_objective(RationalVector coefficients, Sense sense);
  void add_constraint(RationalVector row, Relation relation, Rational rhs);
  void set_free(std::size_t variable);

  std::size_t variables() const { return n_; }
  const RationalVector& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool is_free(std::size_t variable) const { return free_[variable]; }

 private:
  std::size_t n_;
  RationalVector objective_;
  Sense sense_ = Sense::kMaximize;
  std::vector<Constraint> constraints_;
  std::vector<bool> free_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RationalVector point;
  std::size_t pivots = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

std::string to_string(LpStatus s);

// Two-phase primal simplex on a dense tableau in exact arithmetic, with
// Bland's rule for both the entering and the leaving variable.
LpResult simplex_solve(const LinearProgram& lp);

// True when `x` satisfies every constraint and sign restriction exactly.
bool is_feasible(const LinearProgram& lp, const RationalVector& x);

}  // namespace wshare

#endif  // WSHARE_SIMPLEX_HPP_
