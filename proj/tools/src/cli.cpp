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

#include "wshare/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "wshare/core.hpp"
#include "wshare/io.hpp"

namespace wshare::cli {
namespace {

using nlohmann::json;

// Raised for option combinations that cannot run together.
class Incompatible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string output = "table";
  std::string disagreement;  // empty: instance file block, else rp
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  bool allow_float = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "Instance JSON file or fixture, e.g. EX1(1/10)")
      ->required();
  cmd->add_option("--output,-o", c.output, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--disagreement,-d", c.disagreement,
                  "rp | eating | uniform | rp-mc | explicit=FILE | "
                  "explicit=v1,v2,...");
  cmd->add_option("--samples", c.samples, "Monte-Carlo samples (rp-mc)");
  cmd->add_option("--seed", c.seed, "Monte-Carlo seed (rp-mc)");
  cmd->add_flag("--allow-float", c.allow_float,
                "Accept JSON floating-point numbers in the instance");
}

DisagreementSpec disagreement_spec(const Common& c, const io::LoadedInstance& in) {
  DisagreementSpec spec;
  if (!c.disagreement.empty()) {
    spec = io::resolve(io::parse_disagreement_arg(c.disagreement),
                       n_agents(in.instance));
  } else if (in.disagreement) {
    spec = *in.disagreement;
  }
  if ((c.samples || c.seed) && spec.mode != DisagreementMode::kRpMonteCarlo) {
    throw Incompatible("--samples and --seed need --disagreement rp-mc");
  }
  if (c.samples) spec.samples = *c.samples;
  if (c.seed) spec.seed = *c.seed;
  if (spec.mode == DisagreementMode::kRpMonteCarlo && spec.samples == 0) {
    throw Incompatible("--samples must be positive");
  }
  if (spec.mode == DisagreementMode::kEating &&
      !std::holds_alternative<MatchingInstance>(in.instance)) {
    throw Incompatible("eating disagreement needs a matching instance");
  }
  if (spec.mode == DisagreementMode::kExplicit &&
      spec.explicit_utilities.size() != n_agents(in.instance)) {
    throw Incompatible("explicit disagreement needs " +
                       std::to_string(n_agents(in.instance)) + " utilities");
  }
  return spec;
}

// Pads columns to equal display width; multi-byte characters count once.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> w;
  for (const auto& row : rows) {
    if (w.size() < row.size()) w.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], width(row[k]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(w[k] - width(row[k]) + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << csv_field(row[k]);
    }
    out << '\n';
  }
}

std::string alternative_text(const AlternativeRef& alt, const AnyInstance& inst) {
  const json j = io::alternative_to_json(alt, inst);
  if (j.is_string()) return j.get<std::string>();
  const auto& agents = agent_labels(inst);
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += agents[i] + "->" + j[i].get<std::string>();
  }
  return s;
}

void print_trace_text(std::ostream& out, const WaterFillingTrace& t,
                      const std::vector<std::string>& labels) {
  out << "water filling trace\n";
  if (!t.initially_locked.empty()) {
    out << "  initially locked: " << t.initially_locked.str(&labels) << '\n';
  }
  for (std::size_t k = 0; k < t.iterations.size(); ++k) {
    const auto& it = t.iterations[k];
    out << "  step " << k + 1 << ": +" << it.increment << " (≈"
        << io::approx(it.increment) << "), locks "
        << it.newly_locked.str(&labels) << ", tight";
    for (AgentSet s : it.tight_sets) out << ' ' << s.str(&labels);
    out << '\n';
  }
  out << "  exhausted: " << yes_no(t.exhausted) << '\n';
}

void print_levels_text(std::ostream& out, const LexResult& r, MechanismKind kind,
                       const std::vector<std::string>& labels) {
  const json j = io::levels_to_json(r, kind, labels);
  out << "lexicographic LP levels (" << r.lp_solves << " LP solves)\n";
  for (const auto& level : j["levels"]) {
    out << "  level " << level["level"].get<std::string>() << ": fixes";
    for (const auto& f : level["fixed"]) {
      if (f.is_string()) {
        out << ' ' << f.get<std::string>();
      } else {
        std::string s = "{";
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (k) s += ",";
          s += f[k].get<std::string>();
        }
        out << ' ' << s << '}';
      }
    }
    out << '\n';
  }
}

int cmd_solve(const Common& c, const std::string& mechanism, bool explain,
              std::ostream& out) {
  const io::LoadedInstance in = io::load_instance(c.input, c.allow_float);
  MechanismKind kind;
  try {
    kind = parse_mechanism(mechanism);
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(e.what());
  }
  if (!applicable(kind, in.instance)) {
    throw Incompatible(mechanism + " needs a square matching instance");
  }
  const DisagreementSpec spec = disagreement_spec(c, in);
  const MechanismRun run = run_mechanism(kind, in.instance, spec);
  const SetFunctionOracle o = oracle_of(in.instance);
  const MechanismFlags flags = compute_flags(o, run.solution, run.disagreement,
                                             components_of(in.instance));
  const auto& labels = agent_labels(in.instance);

  if (c.output == "json") {
    out << io::run_to_json(run, in.instance, flags, explain).dump(2) << '\n';
    return kOk;
  }
  const Solution& s = run.solution;
  if (c.output == "csv") {
    std::vector<std::vector<std::string>> rows = {
        {"agent", "value", "transfer", "utility", "disagreement"}};
    for (std::size_t i = 0; i < labels.size(); ++i) {
      rows.push_back({labels[i], s.values()[i].str(), s.transfers()[i].str(),
                      s.utilities()[i].str(), run.disagreement[i].str()});
    }
    print_csv(out, rows);
    return kOk;
  }
  out << "mechanism: " << s.mechanism() << " (" << run.route << ")\n"
      << "disagreement: " << to_string(run.disagreement.provenance) << '\n'
      << "alternative: " << alternative_text(s.alternative(), in.instance) << '\n';
  std::vector<std::vector<std::string>> rows = {
      {"agent", "value", "transfer", "utility", "≈utility", "disagreement"}};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rows.push_back({labels[i], s.values()[i].str(), s.transfers()[i].str(),
                    s.utilities()[i].str(), "≈" + io::approx(s.utilities()[i]),
                    run.disagreement[i].str()});
  }
  print_table(out, rows);
  out << "in_anticore: " << yes_no(flags.in_anticore)
      << "  dominates: " << yes_no(flags.dominates_disagreement)
      << "  reasonable_from_above: " << yes_no(flags.reasonable_from_above)
      << "  weakly_decomposable: " << yes_no(flags.weakly_decomposable) << '\n';
  if (explain) {
    if (run.trace) print_trace_text(out, *run.trace, labels);
    if (run.levels) print_levels_text(out, *run.levels, kind, labels);
  }
  return kOk;
}

struct CheckOptions {
  bool submodular = false;
  std::string anticore;
  bool ws_core = false;
  bool decompose = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  json data;
};

int cmd_check(const Common& c, CheckOptions opt, std::ostream& out) {
  const io::LoadedInstance in = io::load_instance(c.input, c.allow_float);
  if (!opt.submodular && opt.anticore.empty() && !opt.ws_core && !opt.decompose) {
    opt.submodular = opt.ws_core = opt.decompose = true;
  }
  const SetFunctionOracle o = oracle_of(in.instance);
  const auto& labels = agent_labels(in.instance);
  std::optional<io::LoadedSolution> sol;
  if (!opt.anticore.empty()) {
    sol = io::load_solution(opt.anticore);
    if (sol->utilities.size() != o.n_agents()) {
      throw Incompatible("solution has " + std::to_string(sol->utilities.size()) +
                         " utilities for " + std::to_string(o.n_agents()) +
                         " agents");
    }
  }
  std::vector<CheckResult> results;

  if (opt.submodular) {
    const auto v = is_submodular(o);
    CheckResult r{"submodular", v.submodular, "", json::object()};
    if (!v) {
      r.detail = "W(" + v.s.str(&labels) + ") + W(" + v.t.str(&labels) +
                 ") = " + (o.wmax(v.s) + o.wmax(v.t)).str() + " < " +
                 (o.wmax(v.s & v.t) + o.wmax(v.s | v.t)).str() + " = W(" +
                 (v.s & v.t).str(&labels) + ") + W(" + (v.s | v.t).str(&labels) +
                 ")";
      r.data = {{"s", v.s.str(&labels)}, {"t", v.t.str(&labels)}};
    }
    results.push_back(r);
  }
  if (sol) {
    const auto v = check_anticore(o, sol->utilities);
    CheckResult r{"anticore", v.ok, "", json::object()};
    if (!v) {
      r.detail = "u" + v.set.str(&labels) + " exceeds W by " + (-v.slack).str();
      r.data = {{"set", v.set.str(&labels)}, {"slack", v.slack.str()}};
    }
    results.push_back(r);
  }
  if (opt.ws_core) {
    const DisagreementSpec spec = disagreement_spec(c, in);
    const DisagreementPoint d = compute_disagreement(in.instance, spec);
    const auto v = ws_core_nonempty(o, d);
    const auto cond = sufficient_conditions(o, d);
    CheckResult r{"ws-core", v.nonempty, "", json::object()};
    r.data["disagreement"] = io::disagreement_to_json(d);
    r.data["sufficient_condition"] = to_string(cond.kind());
    if (v) {
      r.detail = "nonempty, witness " + to_string(v.witness);
      r.data["witness"] = io::rationals(v.witness);
    } else {
      r.detail = "empty: max x(N) = " +
                 (v.optimum ? v.optimum->str() : std::string("infeasible")) +
                 " < f(N) = " + v.target.str();
      r.data["target"] = v.target.str();
      if (v.optimum) r.data["optimum"] = v.optimum->str();
    }
    results.push_back(r);
  }
  if (opt.decompose) {
    const ComponentPartition p = components_of(in.instance);
    CheckResult r{"decompose", true, "", io::partition_to_json(p, in.instance)};
    r.detail = std::to_string(p.size()) + " block(s) [" +
               to_string(p.certificate) + "]:";
    for (AgentSet b : p.agent_blocks) r.detail += " " + b.str(&labels);
    if (sol && !sol->transfers.empty()) {
      if (sol->transfers.size() != o.n_agents()) {
        throw Incompatible("solution transfers do not match the agents");
      }
      for (AgentSet b : p.agent_blocks) {
        Rational net;
        for (std::size_t i : b.members()) net += sol->transfers[i];
        if (!net.is_zero()) {
          r.pass = false;
          r.detail += "; net transfer " + net.str() + " into " + b.str(&labels);
          r.data["violation"] = {{"block", b.str(&labels)}, {"net_transfer", net.str()}};
          break;
        }
      }
    }
    results.push_back(r);
  }

  const bool all_pass = std::all_of(results.begin(), results.end(),
                                    [](const CheckResult& r) { return r.pass; });
  if (c.output == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      json j = r.data;
      j["check"] = r.name;
      j["pass"] = r.pass;
      arr.push_back(j);
    }
    out << json{{"checks", arr}, {"pass", all_pass}}.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows = {{"check", "verdict", "detail"}};
    for (const auto& r : results) {
      rows.push_back({r.name, r.pass ? "pass" : "fail", r.detail});
    }
    if (c.output == "csv") {
      print_csv(out, rows);
    } else {
      print_table(out, rows);
    }
  }
  return all_pass ? kOk : kCheckFailed;
}

int cmd_compare(const Common& c, std::ostream& out) {
  const io::LoadedInstance in = io::load_instance(c.input, c.allow_float);
  const DisagreementSpec spec = disagreement_spec(c, in);
  const MechanismReport report = compare_mechanisms(in.instance, spec);
  const auto& labels = agent_labels(in.instance);

  if (c.output == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json j{{"mechanism", to_string(row.kind)}};
      if (row.run) {
        j["utilities"] = io::rationals(row.run->solution.utilities());
        j["transfers"] = io::rationals(row.run->solution.transfers());
        j["flags"] = io::flags_to_json(row.flags);
      } else {
        j["error"] = row.error;
      }
      rows.push_back(j);
    }
    out << json{{"disagreement", io::disagreement_to_json(report.disagreement)},
                {"partition", io::partition_to_json(report.partition, in.instance)},
                {"rows", rows}}
               .dump(2)
        << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"mechanism"};
  for (const auto& l : labels) header.push_back(l);
  for (const char* f : {"in_anticore", "dominates", "reasonable_from_above",
                        "weakly_decomposable"}) {
    header.push_back(f);
  }
  rows.push_back(header);
  for (const auto& row : report.rows) {
    std::vector<std::string> r = {to_string(row.kind)};
    if (row.run) {
      for (const auto& u : row.run->solution.utilities()) {
        r.push_back(c.output == "table" ? u.str() + " ≈" + io::approx(u) : u.str());
      }
      for (bool f : {row.flags.in_anticore, row.flags.dominates_disagreement,
                     row.flags.reasonable_from_above, row.flags.weakly_decomposable}) {
        r.push_back(yes_no(f));
      }
    } else {
      r.push_back("error: " + row.error);
    }
    rows.push_back(r);
  }
  if (c.output == "csv") {
    print_csv(out, rows);
    return kOk;
  }
  out << "disagreement (" << to_string(report.disagreement.provenance)
      << "): " << to_string(report.disagreement.utilities) << '\n'
      << "components [" << to_string(report.partition.certificate) << "]:";
  for (AgentSet b : report.partition.agent_blocks) out << ' ' << b.str(&labels);
  out << '\n';
  print_table(out, rows);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Welfare-sharing solver for transferable-utility games", "wshare");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common solve_common;
  std::string mechanism = "lexmax";
  bool explain = false;
  CLI::App* solve = app.add_subcommand("solve", "Compute one mechanism's solution");
  add_common(solve, solve_common);
  solve->add_option("--mechanism,-m", mechanism,
                    "lexmax | shapley | ef-maxmin | ks | nash | nucleolus-ws");
  solve->add_flag("--explain", explain,
                  "Attach the water-filling trace or LP level log");

  Common check_common;
  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "Run property checks");
  add_common(check, check_common);
  check->add_flag("--submodular", check_opts.submodular, "Is W_max submodular?");
  check->add_option("--anticore", check_opts.anticore,
                    "Solution JSON whose utilities must lie in the anticore");
  check->add_flag("--ws-core", check_opts.ws_core, "Is the WS-core nonempty?");
  check->add_flag("--decompose", check_opts.decompose,
                  "Find independent components (and check the solution's "
                  "net transfers when --anticore is given)");

  Common compare_common;
  CLI::App* compare = app.add_subcommand("compare", "Compare all mechanisms");
  add_common(compare, compare_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_common, mechanism, explain, out);
    if (check->parsed()) return cmd_check(check_common, check_opts, out);
    return cmd_compare(compare_common, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Incompatible& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  } catch (const EmptyCore& e) {
    err << "error: " << e.what() << '\n';
    return kEmptyCore;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what()
        << " (raise the WSHARE_MAX_* environment bounds or use rp-mc)\n";
    return kLimitExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace wshare::cli
