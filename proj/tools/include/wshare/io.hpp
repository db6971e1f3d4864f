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

#ifndef WSHARE_IO_HPP_
#define WSHARE_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "wshare/decompose.hpp"
#include "wshare/fixtures.hpp"
#include "wshare/mechanisms.hpp"

namespace wshare::io {

// Malformed input: bad JSON, schema violations, unknown fixture names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedInstance {
  AnyInstance instance;
  // Disagreement block of the instance file, if any.
  std::optional<DisagreementSpec> disagreement;
};

// JSON numbers that are not integers are rejected unless allow_float;
// strings go through Rational::parse. Rent is applied on load.
LoadedInstance parse_instance(const nlohmann::json& j, bool allow_float);

// A fixture spec ("EX1(1/10)", "KS4") or a path to an instance file.
LoadedInstance load_instance(const std::string& source, bool allow_float);

nlohmann::json instance_to_json(const AnyInstance& inst);

// "rp", "uniform", "explicit=FILE", "explicit=1,2,3", "explicit=0"
// (a single value is broadcast to all agents once n is known).
struct DisagreementArg {
  DisagreementSpec spec;
  bool broadcast = false;
};
DisagreementArg parse_disagreement_arg(const std::string& text);
DisagreementSpec resolve(const DisagreementArg& arg, std::size_t n_agents);

nlohmann::json rationals(const RationalVector& xs);
RationalVector parse_rationals(const nlohmann::json& j, bool allow_float);

nlohmann::json alternative_to_json(const AlternativeRef& alt,
                                   const AnyInstance& inst);
nlohmann::json disagreement_to_json(const DisagreementPoint& d);
nlohmann::json flags_to_json(const MechanismFlags& f);
nlohmann::json partition_to_json(const ComponentPartition& p,
                                 const AnyInstance& inst);
nlohmann::json trace_to_json(const WaterFillingTrace& t,
                             const std::vector<std::string>& labels);
nlohmann::json levels_to_json(const LexResult& r, MechanismKind kind,
                              const std::vector<std::string>& labels);
nlohmann::json run_to_json(const MechanismRun& run, const AnyInstance& inst,
                           const MechanismFlags& flags, bool explain);

// Utilities, and transfers and mechanism tag when present, of a solution
// file.
struct LoadedSolution {
  RationalVector utilities;
  RationalVector transfers;
  std::string mechanism;
};
LoadedSolution load_solution(const std::string& path);

// Six significant digits for table output.
std::string approx(const Rational& x);

}  // namespace wshare::io

#endif  // WSHARE_IO_HPP_
