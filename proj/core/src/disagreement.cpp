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

#include "wshare/disagreement.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "wshare/matching.hpp"

namespace wshare {
namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Serial selection state for matching instances.
struct Held {
  std::size_t agent;
  std::uint64_t desired;
};

struct RpState {
  std::uint64_t free_items = 0;
  std::vector<Held> held;
  Assignment item;  // agent -> item once settled
};

constexpr std::size_t kUnsettled = ~std::size_t{0};

std::vector<std::uint64_t> desired_within(const std::vector<Held>& held,
                                          std::uint64_t items) {
  std::vector<std::uint64_t> out;
  out.reserve(held.size());
  for (const Held& h : held) out.push_back(h.desired & items);
  return out;
}

void settle(RpState& st, const std::vector<std::size_t>& group) {
  std::vector<Held> members;
  for (std::size_t k : group) members.push_back(st.held[k]);
  const auto match = lex_first_match_rows(desired_within(members,
                                                         st.free_items));
  if (!match) throw std::logic_error("held agents lost their claim");
  for (std::size_t r = 0; r < members.size(); ++r) {
    st.item[members[r].agent] = (*match)[r];
    st.free_items &= ~(1ULL << (*match)[r]);
  }
  for (auto it = group.rbegin(); it != group.rend(); ++it) {
    st.held.erase(st.held.begin() + static_cast<std::ptrdiff_t>(*it));
  }
}

// Settles the smallest held group whose desired items are exactly as many
// as its members, until none is left.
void settle_tight_groups(RpState& st) {
  bool changed = true;
  while (changed && !st.held.empty()) {
    changed = false;
    const std::size_t h = st.held.size();
    std::uint64_t best = 0;
    std::size_t best_size = h + 1;
    for (std::uint64_t g = 1; g < (1ULL << h); ++g) {
      const auto size = static_cast<std::size_t>(std::popcount(g));
      if (size >= best_size) continue;
      std::uint64_t items = 0;
      for (std::uint64_t b = g; b != 0; b &= b - 1) {
        items |= st.held[std::countr_zero(b)].desired & st.free_items;
      }
      if (static_cast<std::size_t>(std::popcount(items)) == size) {
        best = g;
        best_size = size;
      }
    }
    if (best != 0) {
      std::vector<std::size_t> group;
      for (std::uint64_t b = best; b != 0; b &= b - 1) {
        group.push_back(static_cast<std::size_t>(std::countr_zero(b)));
      }
      settle(st, group);
      changed = true;
    }
  }
}

void rp_step(const MatchingInstance& m, RpState& st, std::size_t agent) {
  std::uint64_t available = 0;
  for (std::uint64_t b = st.free_items; b != 0; b &= b - 1) {
    const std::uint64_t bit = b & (~b + 1);
    if (st.held.empty() ||
        match_rows(desired_within(st.held, st.free_items & ~bit))) {
      available |= bit;
    }
  }
  std::uint64_t desired = 0;
  const Rational* top = nullptr;
  for (std::uint64_t b = available; b != 0; b &= b - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(b));
    const Rational& v = m.value(agent, j);
    if (top == nullptr || *top < v) {
      top = &v;
      desired = 1ULL << j;
    } else if (v == *top) {
      desired |= 1ULL << j;
    }
  }
  st.held.push_back(Held{agent, desired});
  settle_tight_groups(st);
}

void rp_finish(RpState& st) {
  if (st.held.empty()) return;
  std::vector<std::size_t> group(st.held.size());
  std::iota(group.begin(), group.end(), 0);
  settle(st, group);
}

RpState initial_state(const MatchingInstance& m) {
  if (m.n_items() > 64) throw BoundExceeded("more than 64 items");
  RpState st;
  st.free_items = m.n_items() == 64 ? ~0ULL : ((1ULL << m.n_items()) - 1);
  st.item.assign(m.n_agents(), kUnsettled);
  return st;
}

void rp_dfs(const MatchingInstance& m, const RpState& st,
            std::uint64_t remaining,
            std::vector<std::vector<std::uint64_t>>& counts) {
  if (remaining == 0) {
    RpState done = st;
    rp_finish(done);
    for (std::size_t i = 0; i < done.item.size(); ++i) {
      ++counts[i][done.item[i]];
    }
    return;
  }
  for (std::uint64_t b = remaining; b != 0; b &= b - 1) {
    const auto agent = static_cast<std::size_t>(std::countr_zero(b));
    RpState next = st;
    rp_step(m, next, agent);
    rp_dfs(m, next, remaining & ~(1ULL << agent), counts);
  }
}

DisagreementPoint from_counts(const MatchingInstance& m,
                              const std::vector<std::vector<std::uint64_t>>& c,
                              std::uint64_t total, Provenance provenance) {
  DisagreementPoint d;
  d.provenance = provenance;
  d.utilities.resize(m.n_agents());
  const Rational denom(static_cast<long>(total));
  for (std::size_t i = 0; i < m.n_agents(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < m.n_items(); ++j) {
      if (c[i][j] != 0) acc.add_mul(Rational(static_cast<long>(c[i][j])),
                                    m.value(i, j));
    }
    d.utilities[i] = acc / denom;
  }
  return d;
}

// Alternatives still standing, as a bitset over alternative indices.
using AltSet = std::vector<std::uint64_t>;

void filter_alternatives(const Instance& inst, AltSet& alive,
                         std::size_t agent) {
  const Rational* top = nullptr;
  for (std::size_t w = 0; w < alive.size(); ++w) {
    for (std::uint64_t b = alive[w]; b != 0; b &= b - 1) {
      const std::size_t a = w * 64 + std::countr_zero(b);
      const Rational& v = inst.value(agent, a);
      if (top == nullptr || *top < v) top = &v;
    }
  }
  for (std::size_t w = 0; w < alive.size(); ++w) {
    for (std::uint64_t b = alive[w]; b != 0; b &= b - 1) {
      const std::size_t bit = std::countr_zero(b);
      if (inst.value(agent, w * 64 + bit) != *top) {
        alive[w] &= ~(1ULL << bit);
      }
    }
  }
}

std::size_t first_alive(const AltSet& alive) {
  for (std::size_t w = 0; w < alive.size(); ++w) {
    if (alive[w] != 0) return w * 64 + std::countr_zero(alive[w]);
  }
  throw std::logic_error("no alternative left");
}

AltSet all_alternatives(const Instance& inst) {
  const std::size_t k = inst.n_alternatives();
  AltSet alive((k + 63) / 64, ~0ULL);
  if (k % 64 != 0) alive.back() = (1ULL << (k % 64)) - 1;
  return alive;
}

void dictator_dfs(const Instance& inst, const AltSet& alive,
                  std::uint64_t remaining, std::vector<std::uint64_t>& hits) {
  if (remaining == 0) {
    ++hits[first_alive(alive)];
    return;
  }
  for (std::uint64_t b = remaining; b != 0; b &= b - 1) {
    const auto agent = static_cast<std::size_t>(std::countr_zero(b));
    AltSet next = alive;
    filter_alternatives(inst, next, agent);
    dictator_dfs(inst, next, remaining & ~(1ULL << agent), hits);
  }
}

DisagreementPoint from_hits(const Instance& inst,
                            const std::vector<std::uint64_t>& hits,
                            std::uint64_t total, Provenance provenance) {
  DisagreementPoint d;
  d.provenance = provenance;
  d.utilities.resize(inst.n_agents());
  const Rational denom(static_cast<long>(total));
  for (std::size_t i = 0; i < inst.n_agents(); ++i) {
    Rational acc;
    for (std::size_t a = 0; a < hits.size(); ++a) {
      if (hits[a] != 0) {
        acc.add_mul(Rational(static_cast<long>(hits[a])), inst.value(i, a));
      }
    }
    d.utilities[i] = acc / denom;
  }
  return d;
}

void check_rp_bound(std::size_t n, const Limits& limits) {
  if (n > limits.rp_agents || n > 20) {
    throw BoundExceeded("exact Random Priority: " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.rp_agents) +
                        "; use rp-mc instead");
  }
}

}  // namespace

DisagreementPoint uniform(const Instance& inst) {
  DisagreementPoint d;
  d.provenance = Provenance::kUniform;
  const Rational k(static_cast<long>(inst.n_alternatives()));
  for (const auto& row : inst.values()) d.utilities.push_back(sum(row) / k);
  return d;
}

DisagreementPoint uniform(const MatchingInstance& m) {
  DisagreementPoint d;
  d.provenance = Provenance::kUniform;
  const Rational k(static_cast<long>(m.n_items()));
  for (const auto& row : m.values()) d.utilities.push_back(sum(row) / k);
  return d;
}

DisagreementPoint alternative_disagreement(const Instance& inst,
                                           std::size_t alternative) {
  if (alternative >= inst.n_alternatives()) {
    throw std::out_of_range("no such alternative");
  }
  return DisagreementPoint::explicit_values(inst.column(alternative));
}

RpDetail rp_exact_detail(const MatchingInstance& m, const Limits& limits) {
  const std::size_t n = m.n_agents();
  check_rp_bound(n, limits);
  std::vector<std::vector<std::uint64_t>> counts(
      n, std::vector<std::uint64_t>(m.n_items(), 0));
  rp_dfs(m, initial_state(m), (1ULL << n) - 1, counts);
  const std::uint64_t total = factorial(n);
  RpDetail out;
  out.point = from_counts(m, counts, total, Provenance::kRpExact);
  const Rational denom(static_cast<long>(total));
  out.probability.assign(n, RationalVector(m.n_items()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.n_items(); ++j) {
      out.probability[i][j] = Rational(static_cast<long>(counts[i][j])) / denom;
    }
  }
  return out;
}

DisagreementPoint rp_exact(const MatchingInstance& m, const Limits& limits) {
  return rp_exact_detail(m, limits).point;
}

DisagreementPoint rp_exact(const Instance& inst, const Limits& limits) {
  const std::size_t n = inst.n_agents();
  check_rp_bound(n, limits);
  std::vector<std::uint64_t> hits(inst.n_alternatives(), 0);
  dictator_dfs(inst, all_alternatives(inst), (1ULL << n) - 1, hits);
  return from_hits(inst, hits, factorial(n), Provenance::kRpExact);
}

std::vector<std::size_t> sampled_order(std::size_t n, std::uint64_t seed,
                                       std::uint64_t k) {
  std::uint64_t state = splitmix64(seed) ^ splitmix64(~k);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    state = splitmix64(state);
    const auto j = static_cast<std::size_t>(
        (static_cast<unsigned __int128>(state) * i) >> 64);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

Assignment serial_selection(const MatchingInstance& m,
                            const std::vector<std::size_t>& order) {
  RpState st = initial_state(m);
  for (std::size_t agent : order) rp_step(m, st, agent);
  rp_finish(st);
  return st.item;
}

DisagreementPoint rp_montecarlo(const MatchingInstance& m,
                                std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::vector<std::vector<std::uint64_t>> counts(
      m.n_agents(), std::vector<std::uint64_t>(m.n_items(), 0));
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Assignment a = serial_selection(m, sampled_order(m.n_agents(), seed, k));
    for (std::size_t i = 0; i < a.size(); ++i) ++counts[i][a[i]];
  }
  DisagreementPoint d =
      from_counts(m, counts, samples, Provenance::kRpMonteCarlo);
  d.seed = seed;
  d.samples = samples;
  return d;
}

DisagreementPoint rp_montecarlo(const Instance& inst, std::uint64_t samples,
                                std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::vector<std::uint64_t> hits(inst.n_alternatives(), 0);
  const AltSet start = all_alternatives(inst);
  for (std::uint64_t k = 0; k < samples; ++k) {
    AltSet alive = start;
    for (std::size_t agent : sampled_order(inst.n_agents(), seed, k)) {
      filter_alternatives(inst, alive, agent);
    }
    ++hits[first_alive(alive)];
  }
  DisagreementPoint d = from_hits(inst, hits, samples,
                                  Provenance::kRpMonteCarlo);
  d.seed = seed;
  d.samples = samples;
  return d;
}

EatingResult eating(const MatchingInstance& m) {
  const std::size_t n = m.n_agents();
  const std::size_t k = m.n_items();
  EatingResult out;
  out.schedule.x.assign(n, RationalVector(k));
  RationalVector capacity(k, Rational(1));
  std::vector<char> gone(k, 0);
  Rational clock;

  while (clock < Rational(1)) {
    // Best remaining items per agent and the resulting eating rates.
    std::vector<std::vector<std::size_t>> tops(n);
    RationalVector rate(k);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational* top = nullptr;
      for (std::size_t j = 0; j < k; ++j) {
        if (gone[j]) continue;
        const Rational& v = m.value(i, j);
        if (top == nullptr || *top < v) {
          top = &v;
          tops[i].assign(1, j);
        } else if (v == *top) {
          tops[i].push_back(j);
        }
      }
      if (tops[i].empty()) throw std::logic_error("eating: no item left");
      const Rational share(1, static_cast<long>(tops[i].size()));
      for (std::size_t j : tops[i]) rate[j] += share;
    }
    Rational length = Rational(1) - clock;
    for (std::size_t j = 0; j < k; ++j) {
      if (!gone[j] && rate[j].sign() > 0) {
        length = min(length, capacity[j] / rate[j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Rational bite = length / Rational(static_cast<long>(tops[i].size()));
      for (std::size_t j : tops[i]) out.schedule.x[i][j] += bite;
    }
    EatingPhase phase{length, {}};
    for (std::size_t j = 0; j < k; ++j) {
      if (gone[j] || rate[j].is_zero()) continue;
      capacity[j].sub_mul(rate[j], length);
      if (capacity[j].is_zero()) {
        gone[j] = 1;
        phase.exhausted_items.push_back(j);
      }
    }
    clock += length;
    out.schedule.phases.push_back(std::move(phase));
  }

  out.point.provenance = Provenance::kEating;
  out.point.utilities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.point.utilities[i].add_mul(out.schedule.x[i][j], m.value(i, j));
    }
  }
  return out;
}

}  // namespace wshare
