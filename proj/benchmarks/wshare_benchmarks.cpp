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

// Scaling of the exponential kernels in the number of agents n.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "wshare/core.hpp"
#include "wshare/decompose.hpp"
#include "wshare/disagreement.hpp"
#include "wshare/egalitarian.hpp"
#include "wshare/matching.hpp"
#include "wshare/rivals.hpp"
#include "wshare/welfare.hpp"

namespace wshare {
namespace {

MatchingInstance random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(-10, 10);
  std::vector<std::string> agents, items;
  RationalMatrix values(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    agents.push_back("a" + std::to_string(i + 1));
    items.push_back("i" + std::to_string(i + 1));
    for (auto& x : values[i]) x = Rational(value(rng));
  }
  return MatchingInstance(agents, items, values);
}

void BM_MaxWeightMatching(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_matching(m.values()));
}
BENCHMARK(BM_MaxWeightMatching)->RangeMultiplier(2)->Range(4, 64);

void BM_WmaxAllSubsets(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    // A fresh oracle per pass so memoization does not hide the work.
    const SetFunctionOracle o(m);
    Rational total;
    for (std::uint64_t s = 1; s < (1ULL << m.n_agents()); ++s) {
      total += o.wmax(AgentSet(s));
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_WmaxAllSubsets)->DenseRange(4, 10, 2);

void BM_RpExact(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rp_exact(m));
}
BENCHMARK(BM_RpExact)->DenseRange(3, 8);

void BM_Eating(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(eating(m));
}
BENCHMARK(BM_Eating)->RangeMultiplier(2)->Range(4, 32);

void BM_WaterFilling(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 4);
  const auto d = rp_exact(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(water_filling(SetFunctionOracle(m), d));
  }
}
BENCHMARK(BM_WaterFilling)->DenseRange(3, 8);

void BM_LexmaxLp(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 4);
  const auto d = rp_exact(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexmax_lp(SetFunctionOracle(m), d));
  }
}
BENCHMARK(BM_LexmaxLp)->DenseRange(3, 7);

void BM_CoreNonempty(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 5);
  const auto d = rp_exact(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ws_core_nonempty(SetFunctionOracle(m), d));
  }
}
BENCHMARK(BM_CoreNonempty)->DenseRange(3, 8);

void BM_Shapley(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(shapley(SetFunctionOracle(m)));
}
BENCHMARK(BM_Shapley)->DenseRange(4, 10, 2);

void BM_Components(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_components_matching(m));
}
BENCHMARK(BM_Components)->DenseRange(4, 8);

}  // namespace
}  // namespace wshare

BENCHMARK_MAIN();
