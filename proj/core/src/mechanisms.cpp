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

#include "wshare/mechanisms.hpp"

#include <stdexcept>

#include "wshare/core.hpp"
#include "wshare/disagreement.hpp"
#include "wshare/rivals.hpp"

namespace wshare {

std::string to_string(MechanismKind k) {
  switch (k) {
    case MechanismKind::kLexmax: return "lexmax";
    case MechanismKind::kShapley: return "shapley";
    case MechanismKind::kEfMaxmin: return "ef-maxmin";
    case MechanismKind::kKs: return "ks";
    case MechanismKind::kNash: return "nash";
    case MechanismKind::kNucleolusWs: return "nucleolus-ws";
  }
  return "lexmax";
}

std::string to_string(DisagreementMode m) {
  switch (m) {
    case DisagreementMode::kRp: return "rp";
    case DisagreementMode::kEating: return "eating";
    case DisagreementMode::kUniform: return "uniform";
    case DisagreementMode::kRpMonteCarlo: return "rp-mc";
    case DisagreementMode::kExplicit: return "explicit";
  }
  return "rp";
}

MechanismKind parse_mechanism(const std::string& name) {
  for (MechanismKind k : all_mechanisms()) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown mechanism: " + name);
}

DisagreementMode parse_disagreement_mode(const std::string& name) {
  for (DisagreementMode m :
       {DisagreementMode::kRp, DisagreementMode::kEating,
        DisagreementMode::kUniform, DisagreementMode::kRpMonteCarlo,
        DisagreementMode::kExplicit}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown disagreement mode: " + name);
}

std::vector<MechanismKind> all_mechanisms() {
  return {MechanismKind::kLexmax, MechanismKind::kShapley,
          MechanismKind::kEfMaxmin, MechanismKind::kKs, MechanismKind::kNash,
          MechanismKind::kNucleolusWs};
}

SetFunctionOracle oracle_of(const AnyInstance& inst) {
  return std::visit([](const auto& x) { return SetFunctionOracle(x); }, inst);
}

std::size_t n_agents(const AnyInstance& inst) {
  return std::visit([](const auto& x) { return x.n_agents(); }, inst);
}

const std::vector<std::string>& agent_labels(const AnyInstance& inst) {
  return std::visit(
      [](const auto& x) -> const std::vector<std::string>& {
        return x.agents();
      },
      inst);
}

DisagreementPoint compute_disagreement(const AnyInstance& inst,
                                       const DisagreementSpec& spec,
                                       const Limits& limits) {
  const auto* m = std::get_if<MatchingInstance>(&inst);
  const auto* g = std::get_if<Instance>(&inst);
  switch (spec.mode) {
    case DisagreementMode::kRp:
      return m ? rp_exact(*m, limits) : rp_exact(*g, limits);
    case DisagreementMode::kRpMonteCarlo:
      return m ? rp_montecarlo(*m, spec.samples, spec.seed)
               : rp_montecarlo(*g, spec.samples, spec.seed);
    case DisagreementMode::kUniform:
      return m ? uniform(*m) : uniform(*g);
    case DisagreementMode::kEating:
      if (!m) {
        throw std::invalid_argument("eating needs a matching instance");
      }
      return eating(*m).point;
    case DisagreementMode::kExplicit:
      if (spec.explicit_utilities.size() != n_agents(inst)) {
        throw std::invalid_argument(
            "explicit disagreement needs one utility per agent");
      }
      return DisagreementPoint::explicit_values(spec.explicit_utilities);
  }
  throw std::invalid_argument("unknown disagreement mode");
}

bool needs_core(MechanismKind k) {
  return k == MechanismKind::kLexmax || k == MechanismKind::kNucleolusWs;
}

bool applicable(MechanismKind k, const AnyInstance& inst) {
  if (k != MechanismKind::kEfMaxmin) return true;
  const auto* m = std::get_if<MatchingInstance>(&inst);
  return m != nullptr && m->square();
}

MechanismRun run_mechanism(MechanismKind kind, const AnyInstance& inst,
                           const DisagreementSpec& spec,
                           const Limits& limits) {
  if (!applicable(kind, inst)) {
    throw std::invalid_argument(to_string(kind) +
                                " needs a square matching instance");
  }
  const SetFunctionOracle o = oracle_of(inst);
  // Shapley and EF ignore d; it is still reported for the flags, and a
  // mode that does not apply to the instance falls back to zeros.
  const bool uses_d =
      kind != MechanismKind::kShapley && kind != MechanismKind::kEfMaxmin;
  DisagreementPoint d = DisagreementPoint::zeros(o.n_agents());
  if (uses_d) {
    d = compute_disagreement(inst, spec, limits);
  } else {
    try {
      d = compute_disagreement(inst, spec, limits);
    } catch (const std::invalid_argument&) {
    }
  }
  const std::string name = to_string(kind);
  switch (kind) {
    case MechanismKind::kLexmax: {
      if (is_submodular(o, limits)) {
        WaterFillingResult wf = water_filling(o, d, limits);
        if (wf.solution && check_anticore(o, wf.solution->utilities())) {
          return MechanismRun{kind, *wf.solution, d, "water_filling",
                              std::move(wf.trace), std::nullopt};
        }
      }
      if (!ws_core_nonempty(o, d, limits)) {
        throw EmptyCore("WS-core is empty");
      }
      LexmaxLpResult r = lexmax_lp_detail(o, d, limits);
      return MechanismRun{kind, r.solution, d, "lexmax_lp", std::nullopt,
                          std::move(r.detail)};
    }
    case MechanismKind::kNucleolusWs: {
      if (!ws_core_nonempty(o, d, limits)) {
        throw EmptyCore("WS-core is empty");
      }
      NucleolusResult r = nucleolus_ws_detail(o, d, limits);
      return MechanismRun{kind, r.solution, d, name, std::nullopt,
                          std::move(r.detail)};
    }
    case MechanismKind::kShapley:
      return MechanismRun{kind, shapley(o, limits), d, name, std::nullopt,
                          std::nullopt};
    case MechanismKind::kEfMaxmin: {
      EfResult r = ef_maxmin_detail(std::get<MatchingInstance>(inst));
      return MechanismRun{kind, r.solution, d, name, std::nullopt,
                          std::move(r.detail)};
    }
    case MechanismKind::kKs:
      return MechanismRun{kind, ks_bargaining(o, d), d, name, std::nullopt,
                          std::nullopt};
    case MechanismKind::kNash:
      return MechanismRun{kind, nash_bargaining(o, d), d, name, std::nullopt,
                          std::nullopt};
  }
  throw std::invalid_argument("unknown mechanism");
}

MechanismFn mechanism_fn(MechanismKind kind, DisagreementSpec spec,
                         Limits limits) {
  // Utilities must be exact for per-agent equality checks.
  if (spec.mode == DisagreementMode::kRpMonteCarlo) {
    throw std::invalid_argument("mechanism_fn needs an exact disagreement mode");
  }
  return [kind, spec, limits](const AnyInstance& inst) {
    return run_mechanism(kind, inst, spec, limits).solution.utilities();
  };
}

ComponentPartition components_of(const AnyInstance& inst,
                                 const Limits& limits) {
  if (const auto* m = std::get_if<MatchingInstance>(&inst)) {
    if (m->square()) return find_components_matching(*m, limits);
    ComponentPartition trivial;
    trivial.agent_blocks.push_back(AgentSet::all(m->n_agents()));
    trivial.item_blocks.push_back(AgentSet::all(m->n_items()));
    return trivial;
  }
  const auto& g = std::get<Instance>(inst);
  if (g.n_agents() <= limits.component_agents) {
    return find_components_general(g, limits);
  }
  ComponentPartition trivial;
  trivial.agent_blocks.push_back(AgentSet::all(g.n_agents()));
  return trivial;
}

MechanismFlags compute_flags(const SetFunctionOracle& o, const Solution& sol,
                             const DisagreementPoint& d,
                             const ComponentPartition& partition) {
  MechanismFlags f;
  const RationalVector& u = sol.utilities();
  f.in_anticore = static_cast<bool>(check_anticore(o, u));
  f.dominates_disagreement = static_cast<bool>(check_domination(u, d));
  f.reasonable_from_above = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > o.wmax(AgentSet::singleton(i))) f.reasonable_from_above = false;
  }
  f.weakly_decomposable =
      static_cast<bool>(check_weak_decomposability(partition, sol));
  return f;
}

MechanismReport compare_mechanisms(const AnyInstance& inst,
                                   const DisagreementSpec& spec,
                                   const Limits& limits) {
  MechanismReport report;
  report.disagreement = compute_disagreement(inst, spec, limits);
  report.partition = components_of(inst, limits);
  const SetFunctionOracle o = oracle_of(inst);
  for (MechanismKind k : all_mechanisms()) {
    if (!applicable(k, inst)) continue;
    ReportRow row{k, std::nullopt, {}, {}};
    try {
      row.run = run_mechanism(k, inst, spec, limits);
      row.flags = compute_flags(o, row.run->solution, report.disagreement,
                                report.partition);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wshare
