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

#include "wshare/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace wshare {
namespace {

using R = Rational;

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(std::string(prefix) + std::to_string(i));
  }
  return out;
}

[[noreturn]] void out_of_range(std::string_view name, const Rational& p) {
  throw std::invalid_argument("fixture " + std::string(name) +
                              ": parameter out of range: " + p.str());
}

Rational require(std::string_view, const std::optional<Rational>& p,
                 const Rational& fallback) {
  return p ? *p : fallback;
}

MatchingInstance ex1(const Rational& d) {
  if (d <= R(0) || d >= R(1, 4)) out_of_range("EX1", d);
  return MatchingInstance(
      numbered("student", 3), numbered("room", 3),
      {{R(1) - d, d, R(0)},
       {R(1) - R(2) * d, R(2) * d, R(0)},
       {R(0), R(1, 2) - d, R(1, 2) + d}});
}

Instance ex2() {
  // Alternative-major table: A=(1,1,1,1,3,3), B=(0,2,2,2,2,2),
  // C=(-1,-1,-1,-1,4,-9), D=(0,-2,-2,-2,-9,4).
  const RationalMatrix by_alt = {{1, 1, 1, 1, 3, 3},
                                 {0, 2, 2, 2, 2, 2},
                                 {-1, -1, -1, -1, 4, -9},
                                 {0, -2, -2, -2, -9, 4}};
  RationalMatrix values(6, RationalVector(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t i = 0; i < 6; ++i) values[i][a] = by_alt[a][i];
  }
  return Instance(numbered("", 6), {"A", "B", "C", "D"}, std::move(values));
}

Instance ex3() {
  return Instance(numbered("", 3), numbered("alt", 4),
                  {{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 2}});
}

// Three items, each given to one of four agents. A, B, C are additive;
// D is additive up to a budget of 2.
Instance ex4() {
  const RationalMatrix item_values = {
      {1, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 1, 1}};
  const std::vector<std::string> agents = {"A", "B", "C", "D"};
  std::vector<std::string> alts;
  RationalMatrix values(4);
  for (std::size_t code = 0; code < 64; ++code) {
    std::size_t owner[3] = {code / 16, (code / 4) % 4, code % 4};
    std::string label;
    RationalVector bundle(4);
    for (std::size_t item = 0; item < 3; ++item) {
      if (item) label += ",";
      label += agents[owner[item]];
      bundle[owner[item]] += item_values[owner[item]][item];
    }
    bundle[3] = min(bundle[3], R(2));
    alts.push_back(label);
    for (std::size_t i = 0; i < 4; ++i) values[i].push_back(bundle[i]);
  }
  return Instance(agents, std::move(alts), std::move(values));
}

MatchingInstance ex5() {
  return MatchingInstance(numbered("", 3), {"A", "B", "C", "D"},
                          {{12, 0, 6, 0}, {12, 6, 0, 0}, {24, 12, 0, 25}});
}

MatchingInstance two(const Rational& d) {
  if (d < R(0) || d > R(1)) out_of_range("TWO", d);
  return MatchingInstance({"A", "B"}, {"x", "y"}, {{1, -1}, {d, -d}});
}

Instance wf_fail() {
  return Instance(numbered("", 3), numbered("alt", 3),
                  {{0, -2, 2}, {0, 2, -1}, {0, 2, -1}});
}

Instance empty_core() {
  return Instance(numbered("", 3), numbered("alt", 2),
                  {{0, -1}, {0, 1}, {0, 1}});
}

MatchingInstance ks4() {
  return MatchingInstance(
      numbered("", 4), numbered("item", 4),
      {{4, 8, 0, 0}, {4, 12, 0, 0}, {0, 0, 4, 8}, {0, 0, 4, 20}});
}

Instance nash() {
  return Instance(numbered("", 2), numbered("alt", 2), {{24, 0}, {0, 4}});
}

Instance lip(const Rational& p) {
  if (!p.is_integer() || p < R(3) || p > R(60)) out_of_range("LIP", p);
  const long n = p.numerator().get_si();
  RationalMatrix values;
  values.push_back({1, 2, 0, 0});
  for (long i = 2; i < n; ++i) values.push_back({1, 0, 6, 0});
  values.push_back({R(1), R(0), R(0), R(6 * n)});
  return Instance(numbered("", static_cast<std::size_t>(n)),
                  numbered("alt", 4), std::move(values));
}

MatchingInstance rent5(const Rational& e) {
  if (e <= R(0) || e >= R(1, 8)) out_of_range("RENT5", e);
  const R one_minus = R(1) - e;
  const RationalVector v13 = {one_minus, 0, e, 0, 0};
  const RationalVector v24 = {0, one_minus, 0, e, 0};
  const RationalVector v5 = {0, 0, one_minus / R(3), one_minus / R(3),
                             (R(1) + R(2) * e) / R(3)};
  return MatchingInstance(numbered("", 5), numbered("room", 5),
                          {v13, v24, v13, v24, v5}, R(1));
}

MatchingInstance rpdisc(const Rational& e) {
  if (e <= R(0) || e >= R(1, 2)) out_of_range("RPDISC", e);
  return MatchingInstance(numbered("", 3), numbered("item", 3),
                          {{R(1), R(1) - e, e}, {R(1), R(1) - e, e},
                           {R(1), R(0), e}});
}

}  // namespace

AnyInstance fixture(std::string_view name, std::optional<Rational> param) {
  if (name == "EX1") return ex1(require(name, param, R(1, 10)));
  if (name == "TWO") return two(require(name, param, R(1, 5)));
  if (name == "LIP") return lip(require(name, param, R(5)));
  if (name == "RENT5") return rent5(require(name, param, R(1, 10)));
  if (name == "RPDISC") return rpdisc(require(name, param, R(1, 1000)));
  if (param) {
    throw std::invalid_argument("fixture " + std::string(name) +
                                " takes no parameter");
  }
  if (name == "EX2") return ex2();
  if (name == "EX3") return ex3();
  if (name == "EX4") return ex4();
  if (name == "EX5") return ex5();
  if (name == "WF_FAIL") return wf_fail();
  if (name == "EMPTY_CORE") return empty_core();
  if (name == "KS4") return ks4();
  if (name == "NASH") return nash();
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"EX1",     "EX2",        "EX3", "EX4", "EX5",   "TWO",   "WF_FAIL",
          "EMPTY_CORE", "KS4",     "LIP", "RENT5", "RPDISC", "NASH"};
}

bool is_fixture_spec(std::string_view spec) {
  const auto end = spec.find_first_of("(:");
  const std::string_view name = spec.substr(0, end);
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) return false;
  if (end == std::string_view::npos) return true;
  return spec[end] == ':' || spec.back() == ')';
}

AnyInstance fixture_from_spec(std::string_view spec) {
  const auto open = spec.find_first_of("(:");
  if (open == std::string_view::npos) return fixture(spec);
  const std::string_view name = spec.substr(0, open);
  std::string_view arg = spec.substr(open + 1);
  if (spec[open] == '(') {
    if (arg.empty() || arg.back() != ')') {
      throw std::invalid_argument("malformed fixture spec: " +
                                  std::string(spec));
    }
    arg.remove_suffix(1);
  }
  return fixture(name, Rational::parse(arg));
}

}  // namespace wshare
