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

#ifndef WSHARE_EGALITARIAN_HPP_
#define WSHARE_EGALITARIAN_HPP_

#include <optional>
#include <vector>

#include "wshare/lexmax.hpp"
#include "wshare/model.hpp"
#include "wshare/welfare.hpp"

namespace wshare {

struct WaterFillingStep {
  Rational increment;  // x_j > 0
  AgentSet newly_locked;
  std::vector<AgentSet> tight_sets;  // sets S_j that became tight
};

struct WaterFillingTrace {
  // Agents locked before any increment (anticore already tight at d).
  AgentSet initially_locked;
  std::vector<AgentSet> initial_tight_sets;
  std::vector<WaterFillingStep> iterations;
  RationalVector final_utilities;
  bool exhausted = false;  // sum u = W_max(N)
};

struct WaterFillingResult {
  // Present only when the welfare was exhausted and the oracle is backed
  // by an instance; otherwise the run is diagnostic only.
  std::optional<Solution> solution;
  WaterFillingTrace trace;
};

// Raises every free agent uniformly from u = d until some anticore
// constraint becomes tight, locks that constraint's agents and repeats.
// Certified lexmax only for submodular W_max.
WaterFillingResult water_filling(const SetFunctionOracle& o,
                                 const DisagreementPoint& d,
                                 const Limits& limits = Limits::from_env());

struct LexmaxLpResult {
  Solution solution;
  LexResult detail;  // levels in x = u - d coordinates
};

// Lexmax point of the WS-core through repeated max-min LPs. Throws
// std::domain_error when the WS-core is empty.
LexmaxLpResult lexmax_lp_detail(const SetFunctionOracle& o,
                                const DisagreementPoint& d,
                                const Limits& limits = Limits::from_env());
Solution lexmax_lp(const SetFunctionOracle& o, const DisagreementPoint& d,
                   const Limits& limits = Limits::from_env());

Rational sum_squares(const RationalVector& u);

enum class LorenzOrder { kFirstDominates, kSecondDominates, kIncomparable,
                         kEqual };

std::string to_string(LorenzOrder o);

// Compares ascending prefix sums; requires equal totals.
LorenzOrder lorenz_compare(const RationalVector& u, const RationalVector& w);

// Floating-point projection of d onto the WS-core (minimum of
// sum (u_i - d_i)^2) by Dykstra's alternating projections. Diagnostic only.
std::vector<double> min_square_diag(const SetFunctionOracle& o,
                                    const DisagreementPoint& d, double tol,
                                    std::size_t max_sweeps = 200000);

}  // namespace wshare

#endif  // WSHARE_EGALITARIAN_HPP_
