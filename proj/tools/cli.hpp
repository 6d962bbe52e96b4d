// Copyright 2023 The Authors.
//
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
#ifndef MATKIT_TOOLS_CLI_HPP_
#define MATKIT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace matkit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs the command line `args` (without the program name). Standard input
// is read from `in` whenever a file argument is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace matkit::cli

#endif  // MATKIT_TOOLS_CLI_HPP_
