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

#ifndef WSHARE_RIVALS_HPP_
#define WSHARE_RIVALS_HPP_

#include "wshare/lexmax.hpp"
#include "wshare/model.hpp"
#include "wshare/welfare.hpp"

namespace wshare {

// Subset-weighted Shapley value of W_max.
Solution shapley(const SetFunctionOracle& o,
                 const Limits& limits = Limits::from_env());
// Average marginal contribution over all n! orders.
RationalVector shapley_by_permutations(
    const SetFunctionOracle& o, const Limits& limits = Limits::from_env());

struct EfResult {
  Solution solution;
  RationalVector item_transfers;  // q_j; agent i receives q of her item
  LexResult detail;
};

// Envy-free item transfers for the welfare-maximizing assignment, chosen
// by lexicographic max-min of utilities. Square instances only.
EfResult ef_maxmin_detail(const MatchingInstance& m);
Solution ef_maxmin(const MatchingInstance& m);

// u = d + t (b - d) with b_i = W_max({i}) and t set by sum u = W_max(N).
Solution ks_bargaining(const SetFunctionOracle& o, const DisagreementPoint& d);

// Equal split of the surplus over d.
Solution nash_bargaining(const SetFunctionOracle& o,
                         const DisagreementPoint& d);

struct NucleolusResult {
  Solution solution;
  LexResult detail;  // one expression per proper coalition, by mask order
};

// Lexicographic max-min of excesses u(S) - max(D(S), d(S)) over nonempty
// proper coalitions, subject to sum u = W_max(N). Throws std::domain_error
// when the WS-core is empty.
NucleolusResult nucleolus_ws_detail(const SetFunctionOracle& o,
                                    const DisagreementPoint& d,
                                    const Limits& limits = Limits::from_env());
Solution nucleolus_ws(const SetFunctionOracle& o, const DisagreementPoint& d,
                      const Limits& limits = Limits::from_env());

}  // namespace wshare

#endif  // WSHARE_RIVALS_HPP_
