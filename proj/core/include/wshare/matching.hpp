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

#ifndef WSHARE_MATCHING_HPP_
#define WSHARE_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wshare/model.hpp"
#include "wshare/rational.hpp"

namespace wshare {

struct MatchingResult {
  Rational value;
  Assignment assignment;  // row -> column
};

// Maximum-weight matching covering every row of `w` (rows <= columns).
// Negative weights are allowed; every row is matched regardless.
MatchingResult max_weight_matching(const RationalMatrix& w);

// Same optimum, but the lexicographically smallest optimal assignment.
MatchingResult lex_first_max_weight_matching(const RationalMatrix& w);

// Bipartite matching of rows into columns where row r may use the columns
// in bitmask allowed[r]. Returns row -> column when every row can be matched.
std::optional<Assignment> match_rows(const std::vector<std::uint64_t>& allowed);

// Lexicographically smallest row -> column matching, if one exists.
std::optional<Assignment> lex_first_match_rows(
    const std::vector<std::uint64_t>& allowed);

}  // namespace wshare

#endif  // WSHARE_MATCHING_HPP_
