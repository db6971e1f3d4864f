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

#ifndef WSHARE_CORE_HPP_
#define WSHARE_CORE_HPP_

#include <optional>
#include <string>

#include "wshare/model.hpp"
#include "wshare/simplex.hpp"
#include "wshare/welfare.hpp"

namespace wshare {

struct AnticoreVerdict {
  bool ok = true;
  AgentSet set;    // first violated set
  Rational slack;  // W_max(S) - u(S), negative on violation
  explicit operator bool() const { return ok; }
};

// Scans nonempty subsets by size, then lexicographically.
AnticoreVerdict check_anticore(const SetFunctionOracle& o,
                               const RationalVector& u);

struct DominationVerdict {
  bool ok = true;
  std::size_t agent = 0;  // first agent with u_i < d_i
  Rational gap;           // d_i - u_i
  explicit operator bool() const { return ok; }
};

DominationVerdict check_domination(const RationalVector& u,
                                   const DisagreementPoint& d);

struct CoreVerdict {
  bool nonempty = false;
  RationalVector witness;          // u = x + d when nonempty
  std::optional<Rational> optimum;  // max sum x; absent when infeasible
  Rational target;                  // f(N) = W_max(N) - sum d
  explicit operator bool() const { return nonempty; }
};

// f(S) = W_max(S) - sum_{i in S} d_i for every mask.
RationalVector welfare_gap_table(const SetFunctionOracle& o,
                                 const DisagreementPoint& d);

// The WS-core in x = u - d coordinates: x >= 0, x(S) <= f(S) for every
// nonempty S != N, x(N) = f(N). Zero objective; one variable per agent
// followed by `extra_variables` unconstrained-by-core columns.
LinearProgram ws_core_program(const SetFunctionOracle& o,
                              const DisagreementPoint& d,
                              std::size_t extra_variables = 0);

// Maximize sum x subject to x(S) <= f(S), x >= 0; nonempty iff the
// optimum reaches f(N).
CoreVerdict ws_core_nonempty(const SetFunctionOracle& o,
                             const DisagreementPoint& d,
                             const Limits& limits = Limits::from_env());

enum class SufficientCondition { kSubmodular, kMonotoneGap, kNeither };

struct SufficientConditions {
  bool submodular = false;
  bool monotone_gap = false;
  SufficientCondition kind() const {
    if (submodular) return SufficientCondition::kSubmodular;
    if (monotone_gap) return SufficientCondition::kMonotoneGap;
    return SufficientCondition::kNeither;
  }
};

std::string to_string(SufficientCondition c);

SufficientConditions sufficient_conditions(
    const SetFunctionOracle& o, const DisagreementPoint& d,
    const Limits& limits = Limits::from_env());

}  // namespace wshare

#endif  // WSHARE_CORE_HPP_
