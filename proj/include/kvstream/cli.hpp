// Copyright 2026 The kvstream Authors. All Rights Reserved.
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

#ifndef KVSTREAM_CLI_HPP_
#define KVSTREAM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kvstream::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kInputError = 2;
inline constexpr int kAnalysisError = 3;

// Runs one subcommand (validate, flow, flux, lcc, gaps, cvss, phase, report,
// plot). `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kvstream::cli

#endif  // KVSTREAM_CLI_HPP_
