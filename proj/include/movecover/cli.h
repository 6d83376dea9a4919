// Copyright 2026 The movecover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOVECOVER_CLI_H_
#define MOVECOVER_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace movecover::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // infeasible solution, size guard exceeded
inline constexpr int kParseError = 2;  // unreadable instance / solution file
inline constexpr int kBadArgs = 3;

// Runs the `movecover` command line. `args` excludes the program name.
// Subcommands: gen, solve, validate, render, bench.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace movecover::cli

#endif  // MOVECOVER_CLI_H_
