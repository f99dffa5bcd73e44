// Copyright 2026 The manymatch Authors
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

#ifndef MANYMATCH_CLI_H_
#define MANYMATCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "manymatch/stability.h"

namespace manymatch {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // --strict failures, golden mismatch
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;      // unreadable, malformed or
                                          // semantically invalid input

// Runs the tool on `args` (without the program name). Market arguments are
// file paths, or `builtin:<key>` for a reference market.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// The deterministic transcript `paper-examples` compares against its golden.
std::string ReferenceExamplesReport(int max_edges = kDefaultMaxEdges);

}  // namespace manymatch

#endif  // MANYMATCH_CLI_H_
