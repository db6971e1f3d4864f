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

#include "wshare/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wshare/matching.hpp"

namespace wshare {
namespace {

// Indices of vectors not weakly dominated by a different vector. Candidates
// go in order of decreasing total, so only vectors already kept can
// dominate the current one.
template <typename T>
std::vector<std::size_t> pareto_filter(const std::vector<std::vector<T>>& v) {
  std::vector<T> totals(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    T s{};
    for (const T& x : v[k]) s += x;
    totals[k] = s;
  }
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return totals[b] < totals[a];
  });
  std::vector<std::size_t> kept;
  for (std::size_t k : order) {
    bool dominated = false;
    for (std::size_t f : kept) {
      if (!(totals[k] < totals[f])) continue;
      bool covers = true;
      for (std::size_t i = 0; i < v[k].size() && covers; ++i) {
        covers = !(v[f][i] < v[k][i]);
      }
      if (covers) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(k);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Common-denominator integer copy of the matrix when it fits in int64
// with room for n-fold sums.
std::optional<std::vector<std::vector<long>>> as_integers(
    const RationalMatrix& values) {
  mpz_class lcm = 1;
  for (const auto& row : values) {
    for (const auto& x : row) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t());
    }
  }
  const mpz_class limit = mpz_class(1) << 56;
  std::vector<std::vector<long>> out;
  for (const auto& row : values) {
    std::vector<long> r;
    for (const auto& x : row) {
      const mpz_class scaled = x.numerator() * (lcm / x.denominator());
      if (abs(scaled) >= limit) return std::nullopt;
      r.push_back(scaled.get_si());
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> assignment_values(
    const std::vector<std::vector<T>>& w, const std::vector<Assignment>& all) {
  std::vector<std::vector<T>> out;
  out.reserve(all.size());
  for (const Assignment& a : all) {
    std::vector<T> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = w[i][a[i]];
    out.push_back(std::move(v));
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Order blocks by their lowest agent.
void sort_blocks(ComponentPartition& p) {
  std::vector<std::size_t> idx(p.agent_blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return p.agent_blocks[a].members().front() <
           p.agent_blocks[b].members().front();
  });
  ComponentPartition sorted;
  sorted.certificate = p.certificate;
  for (std::size_t k : idx) {
    sorted.agent_blocks.push_back(p.agent_blocks[k]);
    if (p.has_items()) sorted.item_blocks.push_back(p.item_blocks[k]);
  }
  p = std::move(sorted);
}

bool strictly_above(const MatchingInstance& m, std::size_t agent,
                    std::uint64_t upper, std::uint64_t lower) {
  for (std::uint64_t a = upper; a != 0; a &= a - 1) {
    for (std::uint64_t b = lower; b != 0; b &= b - 1) {
      if (!(m.value(agent, std::countr_zero(b)) <
            m.value(agent, std::countr_zero(a)))) {
        return false;
      }
    }
  }
  return true;
}

// A block (P, M) is certified when every agent of P strictly prefers every
// item of M over every item outside M. Splits are tentative: a remainder
// block that cannot itself be certified forces the next candidate split.
bool split_block(const MatchingInstance& m, std::uint64_t agents,
                 std::uint64_t items, std::uint64_t all_items,
                 ComponentPartition& out) {
  const auto size = static_cast<std::size_t>(std::popcount(items));
  for (std::uint64_t ab = agents; ab != 0; ab &= ab - 1) {
    const std::size_t i = std::countr_zero(ab);
    std::vector<std::size_t> ranked;
    for (std::uint64_t b = items; b != 0; b &= b - 1) {
      ranked.push_back(std::countr_zero(b));
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](std::size_t x, std::size_t y) {
                       return m.value(i, y) < m.value(i, x);
                     });
    std::uint64_t top = 0;
    for (std::size_t k = 0; k + 1 < size; ++k) {
      top |= 1ULL << ranked[k];
      if (!(m.value(i, ranked[k + 1]) < m.value(i, ranked[k]))) continue;
      std::uint64_t group = 0;
      for (std::uint64_t b = agents; b != 0; b &= b - 1) {
        const std::size_t a = std::countr_zero(b);
        if (strictly_above(m, a, top, all_items & ~top)) group |= 1ULL << a;
      }
      if (static_cast<std::size_t>(std::popcount(group)) != k + 1) continue;
      ComponentPartition trial;
      if (split_block(m, group, top, all_items, trial) &&
          split_block(m, agents & ~group, items & ~top, all_items, trial)) {
        for (std::size_t t = 0; t < trial.agent_blocks.size(); ++t) {
          out.agent_blocks.push_back(trial.agent_blocks[t]);
          out.item_blocks.push_back(trial.item_blocks[t]);
        }
        return true;
      }
    }
  }
  for (std::uint64_t b = agents; b != 0; b &= b - 1) {
    if (!strictly_above(m, std::countr_zero(b), items, all_items & ~items)) {
      return false;
    }
  }
  out.agent_blocks.push_back(AgentSet(agents));
  out.item_blocks.push_back(AgentSet(items));
  return true;
}

std::vector<RationalVector> columns(const Instance& inst) {
  std::vector<RationalVector> out;
  for (std::size_t a = 0; a < inst.n_alternatives(); ++a) {
    out.push_back(inst.column(a));
  }
  return out;
}

std::vector<std::size_t> pareto_for(const std::vector<RationalVector>& cols,
                                    AgentSet s) {
  const std::vector<std::size_t> members = s.members();
  std::vector<RationalVector> projected;
  for (const auto& c : cols) {
    RationalVector p;
    for (std::size_t i : members) p.push_back(c[i]);
    projected.push_back(std::move(p));
  }
  return pareto_filter(projected);
}

}  // namespace

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::kExact: return "exact";
    case Certificate::kSufficient: return "sufficient";
    case Certificate::kUserSuppliedVerified: return "user_supplied_verified";
  }
  return "sufficient";
}

std::vector<std::size_t> ComponentPartition::block_of(
    std::size_t n_agents) const {
  std::vector<std::size_t> out(n_agents, 0);
  for (std::size_t b = 0; b < agent_blocks.size(); ++b) {
    for (std::size_t i : agent_blocks[b].members()) out.at(i) = b;
  }
  return out;
}

std::vector<Assignment> pareto_optimal_assignments(const MatchingInstance& m,
                                                   const Limits& limits) {
  if (!m.square()) throw std::invalid_argument("square instance required");
  if (m.n_agents() > limits.pareto_agents) {
    throw BoundExceeded("Pareto enumeration: " + std::to_string(m.n_agents()) +
                        " agents exceeds bound " +
                        std::to_string(limits.pareto_agents));
  }
  const std::vector<Assignment> all =
      enumerate_assignments(m.n_agents(), m.n_items());
  std::vector<std::size_t> keep;
  if (const auto ints = as_integers(m.values())) {
    keep = pareto_filter(assignment_values(*ints, all));
  } else {
    keep = pareto_filter(assignment_values(m.values(), all));
  }
  std::vector<Assignment> out;
  for (std::size_t k : keep) out.push_back(all[k]);
  return out;
}

ComponentPartition find_components_matching(const MatchingInstance& m,
                                            const Limits& limits) {
  if (!m.square()) throw std::invalid_argument("square instance required");
  if (m.n_agents() > limits.pareto_agents) return preference_blocks(m);
  const std::size_t n = m.n_agents();
  UnionFind uf(2 * n);  // agents 0..n-1, items n..2n-1
  for (const Assignment& a : pareto_optimal_assignments(m, limits)) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, n + a[i]);
  }
  ComponentPartition out;
  out.certificate = Certificate::kExact;
  std::vector<std::size_t> root_block(2 * n, SIZE_MAX);
  for (std::size_t v = 0; v < 2 * n; ++v) {
    const std::size_t r = uf.find(v);
    if (root_block[r] == SIZE_MAX) {
      root_block[r] = out.agent_blocks.size();
      out.agent_blocks.emplace_back();
      out.item_blocks.emplace_back();
    }
    const std::size_t b = root_block[r];
    if (v < n) {
      out.agent_blocks[b] = out.agent_blocks[b].with(v);
    } else {
      out.item_blocks[b] = out.item_blocks[b].with(v - n);
    }
  }
  sort_blocks(out);
  return out;
}

ComponentPartition preference_blocks(const MatchingInstance& m) {
  if (!m.square()) throw std::invalid_argument("square instance required");
  if (m.n_items() > 64) throw BoundExceeded("more than 64 items");
  ComponentPartition out;
  out.certificate = Certificate::kSufficient;
  const std::size_t n = m.n_agents();
  const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  split_block(m, full, full, full, out);
  sort_blocks(out);
  return out;
}

ComponentVerdict verify_component(const Instance& inst, AgentSet s,
                                  const Limits& limits) {
  const std::size_t n = inst.n_agents();
  if (n > limits.subset_agents) {
    throw BoundExceeded("component check: too many agents");
  }
  const AgentSet everyone = AgentSet::all(n);
  const AgentSet rest = everyone - s;
  if (s.empty() || rest.empty()) return ComponentVerdict{};
  const std::vector<RationalVector> cols = columns(inst);
  const std::set<RationalVector> present(cols.begin(), cols.end());
  const std::vector<std::size_t> po_s = pareto_for(cols, s);
  const std::vector<std::size_t> po_rest = pareto_for(cols, rest);
  for (std::size_t a : po_s) {
    for (std::size_t b : po_rest) {
      RationalVector mixed(n);
      for (std::size_t i = 0; i < n; ++i) {
        mixed[i] = s.contains(i) ? cols[a][i] : cols[b][i];
      }
      if (!present.contains(mixed)) return ComponentVerdict{false, a, b};
    }
  }
  return ComponentVerdict{};
}

ComponentPartition find_components_general(const Instance& inst,
                                           const Limits& limits) {
  const std::size_t n = inst.n_agents();
  if (n > limits.component_agents) {
    throw BoundExceeded("component search: " + std::to_string(n) +
                        " agents exceeds bound " +
                        std::to_string(limits.component_agents));
  }
  std::vector<AgentSet> components;
  for (AgentSet s : subsets_by_size(AgentSet::all(n))) {
    bool has_smaller = false;
    for (AgentSet c : components) {
      if (c.subset_of(s)) {
        has_smaller = true;
        break;
      }
    }
    if (has_smaller) continue;
    if (verify_component(inst, s, limits)) components.push_back(s);
  }
  ComponentPartition out;
  out.certificate = Certificate::kExact;
  out.agent_blocks = components;
  sort_blocks(out);
  return out;
}

ComponentPartition verify_partition(const Instance& inst,
                                    const std::vector<AgentSet>& blocks,
                                    const Limits& limits) {
  AgentSet seen;
  for (AgentSet b : blocks) {
    if (b.empty() || !(seen & b).empty()) {
      throw std::invalid_argument("blocks must be disjoint and nonempty");
    }
    seen = seen | b;
  }
  if (seen != AgentSet::all(inst.n_agents())) {
    throw std::invalid_argument("blocks must cover every agent");
  }
  for (AgentSet b : blocks) {
    if (!verify_component(inst, b, limits)) {
      throw std::invalid_argument("not an independent component: " +
                                  b.str(&inst.agents()));
    }
  }
  ComponentPartition out;
  out.agent_blocks = blocks;
  out.certificate = Certificate::kUserSuppliedVerified;
  return out;
}

WeakVerdict check_weak_decomposability(const ComponentPartition& partition,
                                       const Solution& sol) {
  for (std::size_t b = 0; b < partition.size(); ++b) {
    Rational net;
    for (std::size_t i : partition.agent_blocks[b].members()) {
      net += sol.transfers().at(i);
    }
    if (!net.is_zero()) return WeakVerdict{false, b, net};
  }
  return WeakVerdict{};
}

AnyInstance restrict_to_block(const AnyInstance& inst,
                              const ComponentPartition& partition,
                              std::size_t block) {
  const AgentSet agents = partition.agent_blocks.at(block);
  if (const auto* m = std::get_if<MatchingInstance>(&inst)) {
    if (!partition.has_items()) {
      throw std::invalid_argument("matching partition needs item blocks");
    }
    return m->restrict(agents, partition.item_blocks.at(block));
  }
  return std::get<Instance>(inst).restrict_agents(agents);
}

StrongVerdict check_strong_decomposability(const MechanismFn& mechanism,
                                           const AnyInstance& inst,
                                           const ComponentPartition& partition) {
  const RationalVector whole = mechanism(inst);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    const RationalVector part = mechanism(restrict_to_block(inst, partition, b));
    const std::vector<std::size_t> members =
        partition.agent_blocks[b].members();
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (whole.at(members[k]) != part.at(k)) {
        return StrongVerdict{false, members[k], whole[members[k]], part[k]};
      }
    }
  }
  return StrongVerdict{};
}

}  // namespace wshare
