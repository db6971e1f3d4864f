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

#ifndef WSHARE_CLI_HPP_
#define WSHARE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wshare::cli {

// Exit codes of the wshare tool.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kIncompatible = 3;
inline constexpr int kEmptyCore = 4;
inline constexpr int kLimitExceeded = 5;

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wshare::cli

#endif  // WSHARE_CLI_HPP_
