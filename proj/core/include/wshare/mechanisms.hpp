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

#ifndef WSHARE_MECHANISMS_HPP_
#define WSHARE_MECHANISMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wshare/decompose.hpp"
#include "wshare/egalitarian.hpp"
#include "wshare/fixtures.hpp"
#include "wshare/lexmax.hpp"
#include "wshare/model.hpp"
#include "wshare/welfare.hpp"

namespace wshare {

enum class MechanismKind { kLexmax, kShapley, kEfMaxmin, kKs, kNash,
                           kNucleolusWs };
enum class DisagreementMode { kRp, kEating, kUniform, kRpMonteCarlo,
                              kExplicit };

std::string to_string(MechanismKind k);
std::string to_string(DisagreementMode m);
MechanismKind parse_mechanism(const std::string& name);
DisagreementMode parse_disagreement_mode(const std::string& name);
std::vector<MechanismKind> all_mechanisms();

struct DisagreementSpec {
  DisagreementMode mode = DisagreementMode::kRp;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  RationalVector explicit_utilities;
};

SetFunctionOracle oracle_of(const AnyInstance& inst);
std::size_t n_agents(const AnyInstance& inst);
const std::vector<std::string>& agent_labels(const AnyInstance& inst);

// Throws std::invalid_argument for combinations that do not apply
// (Eating on a general instance, mismatched explicit length).
DisagreementPoint compute_disagreement(
    const AnyInstance& inst, const DisagreementSpec& spec,
    const Limits& limits = Limits::from_env());

// True when the mechanism needs the WS-core to be nonempty.
bool needs_core(MechanismKind k);
// ef-maxmin applies only to square matching instances.
bool applicable(MechanismKind k, const AnyInstance& inst);

class EmptyCore : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MechanismRun {
  MechanismKind kind;
  Solution solution;
  DisagreementPoint disagreement;
  // "water_filling" or "lexmax_lp" for lexmax; the mechanism name otherwise.
  std::string route;
  std::optional<WaterFillingTrace> trace;
  std::optional<LexResult> levels;
};

// lexmax uses water filling on submodular W_max and the LP scheme
// otherwise. Throws EmptyCore for core-requiring mechanisms.
MechanismRun run_mechanism(MechanismKind kind, const AnyInstance& inst,
                           const DisagreementSpec& spec,
                           const Limits& limits = Limits::from_env());

// Utilities only; suitable for check_strong_decomposability.
MechanismFn mechanism_fn(MechanismKind kind, DisagreementSpec spec,
                         Limits limits = Limits::from_env());

// Exact partition when affordable, preference blocks or the trivial
// partition otherwise.
ComponentPartition components_of(const AnyInstance& inst,
                                 const Limits& limits = Limits::from_env());

struct MechanismFlags {
  bool in_anticore = false;
  bool dominates_disagreement = false;
  bool reasonable_from_above = false;
  bool weakly_decomposable = false;
};

MechanismFlags compute_flags(const SetFunctionOracle& o, const Solution& sol,
                             const DisagreementPoint& d,
                             const ComponentPartition& partition);

struct ReportRow {
  MechanismKind kind;
  std::optional<MechanismRun> run;
  MechanismFlags flags;
  std::string error;  // why the mechanism produced no solution
};

struct MechanismReport {
  DisagreementPoint disagreement;
  ComponentPartition partition;
  std::vector<ReportRow> rows;
};

MechanismReport compare_mechanisms(const AnyInstance& inst,
                                   const DisagreementSpec& spec,
                                   const Limits& limits = Limits::from_env());

}  // namespace wshare

#endif  // WSHARE_MECHANISMS_HPP_
