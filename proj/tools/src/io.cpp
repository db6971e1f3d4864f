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

#include "wshare/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wshare::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Rational parse_value(const json& v, bool allow_float) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) {
      return Rational::parse(v.dump());
    }
    if (v.is_number_float()) {
      if (!allow_float) {
        fail("floating-point value " + v.dump() +
             " needs --allow-float (or pass it as a string)");
      }
      return Rational::parse(v.dump());
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  fail("expected a rational, got " + v.dump());
}

std::vector<std::string> parse_labels(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array() || arr.empty()) {
    fail(std::string("\"") + key + "\" must be a nonempty array");
  }
  std::vector<std::string> out;
  for (const json& x : arr) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      out.push_back(x.dump());
    } else {
      fail(std::string("\"") + key + "\" entries must be strings");
    }
  }
  return out;
}

DisagreementSpec parse_disagreement_block(const json& j, bool allow_float) {
  DisagreementSpec spec;
  try {
    spec.mode = parse_disagreement_mode(field(j, "mode").get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const json::exception& e) {
    fail(std::string("disagreement.mode: ") + e.what());
  }
  if (j.contains("utilities")) {
    spec.explicit_utilities = parse_rationals(j.at("utilities"), allow_float);
  }
  try {
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) {
      spec.samples = j.at("samples").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    fail(std::string("disagreement: ") + e.what());
  }
  return spec;
}

std::vector<std::string> set_labels(AgentSet s,
                                    const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t i : s.members()) out.push_back(labels.at(i));
  return out;
}

}  // namespace

RationalVector parse_rationals(const nlohmann::json& j, bool allow_float) {
  if (!j.is_array()) fail("expected an array of rationals, got " + j.dump());
  RationalVector out;
  for (const json& v : j) out.push_back(parse_value(v, allow_float));
  return out;
}

LoadedInstance parse_instance(const nlohmann::json& j, bool allow_float) {
  if (!j.is_object()) fail("instance must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k != "general" && k != "matching") {
    fail("\"kind\" must be \"general\" or \"matching\", got \"" + k + "\"");
  }
  const auto agents = parse_labels(j, "agents");
  const auto columns = parse_labels(j, k == "general" ? "alternatives" : "items");
  const json& rows = field(j, "values");
  if (!rows.is_array()) fail("\"values\" must be an array of rows");
  RationalMatrix values;
  for (const json& row : rows) values.push_back(parse_rationals(row, allow_float));
  if (values.size() != agents.size()) {
    fail("\"values\" needs one row per agent");
  }
  for (const auto& row : values) {
    if (row.size() != columns.size()) {
      fail("every row of \"values\" needs one entry per column");
    }
  }

  LoadedInstance out{Instance({"x"}, {"x"}, {{0}}), std::nullopt};
  try {
    if (k == "general") {
      if (j.contains("rent")) fail("\"rent\" applies to matching instances");
      out.instance = Instance(agents, columns, std::move(values));
    } else {
      std::optional<Rational> rent;
      if (j.contains("rent") && !j.at("rent").is_null()) {
        rent = parse_value(j.at("rent"), allow_float);
      }
      MatchingInstance m(agents, columns, std::move(values), rent);
      out.instance = rent ? apply_rent_shift(m) : m;
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (j.contains("disagreement") && !j.at("disagreement").is_null()) {
    out.disagreement = parse_disagreement_block(j.at("disagreement"), allow_float);
  }
  return out;
}

LoadedInstance load_instance(const std::string& source, bool allow_float) {
  if (!std::filesystem::exists(source) && is_fixture_spec(source)) {
    try {
      return LoadedInstance{fixture_from_spec(source), std::nullopt};
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  std::ifstream in(source);
  if (!in) fail("cannot open instance file or fixture: " + source);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(source + ": " + e.what());
  }
  return parse_instance(j, allow_float);
}

nlohmann::json instance_to_json(const AnyInstance& inst) {
  json j;
  std::visit(
      [&j](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Instance>) {
          j["kind"] = "general";
          j["alternatives"] = x.alternatives();
        } else {
          j["kind"] = "matching";
          j["items"] = x.items();
        }
        j["agents"] = x.agents();
        json rows = json::array();
        for (const auto& row : x.values()) rows.push_back(rationals(row));
        j["values"] = rows;
      },
      inst);
  return j;
}

DisagreementArg parse_disagreement_arg(const std::string& text) {
  DisagreementArg out;
  const auto eq = text.find('=');
  const std::string mode = text.substr(0, eq);
  try {
    out.spec.mode = parse_disagreement_mode(mode);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (out.spec.mode != DisagreementMode::kExplicit) {
    if (eq != std::string::npos) fail("only explicit takes a value: " + text);
    return out;
  }
  if (eq == std::string::npos) fail("explicit needs =FILE or =v1,v2,...");
  const std::string value = text.substr(eq + 1);
  if (std::filesystem::exists(value)) {
    std::ifstream in(value);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      fail(value + ": " + e.what());
    }
    const json& u = j.is_object() ? field(j, "utilities") : j;
    out.spec.explicit_utilities = parse_rationals(u, false);
    return out;
  }
  std::stringstream ss(value);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.spec.explicit_utilities.push_back(Rational::parse(token));
    } catch (const std::invalid_argument& e) {
      fail("explicit disagreement: " + std::string(e.what()));
    }
  }
  if (out.spec.explicit_utilities.empty()) fail("explicit disagreement is empty");
  out.broadcast = out.spec.explicit_utilities.size() == 1;
  return out;
}

DisagreementSpec resolve(const DisagreementArg& arg, std::size_t n_agents) {
  DisagreementSpec spec = arg.spec;
  if (arg.broadcast) {
    spec.explicit_utilities.assign(n_agents, arg.spec.explicit_utilities[0]);
  }
  return spec;
}

nlohmann::json rationals(const RationalVector& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

nlohmann::json alternative_to_json(const AlternativeRef& alt,
                                   const AnyInstance& inst) {
  if (const auto* a = std::get_if<std::size_t>(&alt)) {
    return std::get<Instance>(inst).alternatives().at(*a);
  }
  const auto& items = std::get<MatchingInstance>(inst).items();
  json out = json::array();
  for (std::size_t j : std::get<Assignment>(alt)) out.push_back(items.at(j));
  return out;
}

nlohmann::json disagreement_to_json(const DisagreementPoint& d) {
  json j;
  j["provenance"] = to_string(d.provenance);
  j["utilities"] = rationals(d.utilities);
  if (d.provenance == Provenance::kRpMonteCarlo) {
    j["seed"] = d.seed;
    j["samples"] = d.samples;
  }
  return j;
}

nlohmann::json flags_to_json(const MechanismFlags& f) {
  return json{{"in_anticore", f.in_anticore},
              {"dominates", f.dominates_disagreement},
              {"reasonable_from_above", f.reasonable_from_above},
              {"weakly_decomposable", f.weakly_decomposable}};
}

nlohmann::json partition_to_json(const ComponentPartition& p,
                                 const AnyInstance& inst) {
  const auto& labels = agent_labels(inst);
  json blocks = json::array();
  for (std::size_t b = 0; b < p.size(); ++b) {
    json block;
    block["agents"] = set_labels(p.agent_blocks[b], labels);
    if (p.has_items()) {
      block["items"] = set_labels(p.item_blocks[b],
                                  std::get<MatchingInstance>(inst).items());
    }
    blocks.push_back(block);
  }
  return json{{"certificate", to_string(p.certificate)}, {"blocks", blocks}};
}

nlohmann::json trace_to_json(const WaterFillingTrace& t,
                             const std::vector<std::string>& labels) {
  auto sets = [&labels](const std::vector<AgentSet>& ss) {
    json out = json::array();
    for (AgentSet s : ss) out.push_back(set_labels(s, labels));
    return out;
  };
  json iterations = json::array();
  for (const auto& it : t.iterations) {
    iterations.push_back({{"increment", it.increment.str()},
                          {"newly_locked", set_labels(it.newly_locked, labels)},
                          {"tight_sets", sets(it.tight_sets)}});
  }
  return json{{"initially_locked", set_labels(t.initially_locked, labels)},
              {"initial_tight_sets", sets(t.initial_tight_sets)},
              {"iterations", iterations},
              {"final_utilities", rationals(t.final_utilities)},
              {"exhausted", t.exhausted}};
}

nlohmann::json levels_to_json(const LexResult& r, MechanismKind kind,
                              const std::vector<std::string>& labels) {
  json levels = json::array();
  for (const auto& level : r.levels) {
    json fixed = json::array();
    for (std::size_t e : level.fixed) {
      if (kind == MechanismKind::kNucleolusWs) {
        // Expression e is the excess of the coalition with mask e + 1.
        fixed.push_back(set_labels(AgentSet(e + 1), labels));
      } else {
        fixed.push_back(labels.at(e));
      }
    }
    levels.push_back({{"level", level.level.str()}, {"fixed", fixed}});
  }
  return json{{"levels", levels}, {"lp_solves", r.lp_solves}};
}

nlohmann::json run_to_json(const MechanismRun& run, const AnyInstance& inst,
                           const MechanismFlags& flags, bool explain) {
  const auto& labels = agent_labels(inst);
  json j;
  j["mechanism"] = run.solution.mechanism();
  j["route"] = run.route;
  j["agents"] = labels;
  j["alternative"] = alternative_to_json(run.solution.alternative(), inst);
  j["values"] = rationals(run.solution.values());
  j["transfers"] = rationals(run.solution.transfers());
  j["utilities"] = rationals(run.solution.utilities());
  j["disagreement"] = disagreement_to_json(run.disagreement);
  j["flags"] = flags_to_json(flags);
  if (explain) {
    if (run.trace) j["trace"] = trace_to_json(*run.trace, labels);
    if (run.levels) j["lp_levels"] = levels_to_json(*run.levels, run.kind, labels);
  }
  return j;
}

LoadedSolution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open solution file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
  LoadedSolution out;
  out.utilities = parse_rationals(field(j, "utilities"), false);
  if (j.contains("transfers")) {
    out.transfers = parse_rationals(j.at("transfers"), false);
  }
  if (j.contains("mechanism") && j.at("mechanism").is_string()) {
    out.mechanism = j.at("mechanism").get<std::string>();
  }
  return out;
}

std::string approx(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x.to_double());
  return buf;
}

}  // namespace wshare::io
