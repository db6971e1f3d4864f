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

#ifndef WSHARE_FIXTURES_HPP_
#define WSHARE_FIXTURES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wshare/model.hpp"

namespace wshare {

using AnyInstance = std::variant<Instance, MatchingInstance>;

// Named worked examples. Parametrized names take one rational argument:
//   EX1(delta)   0 < delta < 1/4   three students, three rooms
//   TWO(delta)   0 <= delta <= 1   rows (1,-1) and (delta,-delta)
//   LIP(n)       integer n >= 3    disagreement is alternative 1
//   RENT5(eps)   0 < eps < 1/8     five rooms, rent 1
//   RPDISC(eps)  0 < eps < 1/2
// Fixed names: EX2, EX3, EX4, EX5, WF_FAIL, EMPTY_CORE, KS4, NASH.
AnyInstance fixture(std::string_view name,
                    std::optional<Rational> param = std::nullopt);

// Parses "EX1(1/10)", "EX1:1/10" or a bare name.
AnyInstance fixture_from_spec(std::string_view spec);

bool is_fixture_spec(std::string_view spec);
std::vector<std::string> fixture_names();

}  // namespace wshare

#endif  // WSHARE_FIXTURES_HPP_
