// Copyright 2026 The coinf Authors
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

#ifndef COINF_CLI_HPP_
#define COINF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace coinf {

/// Entry point of the `coinf` tool. `args` excludes the program name.
/// Subcommands: reduce, classify, simulate, sweep, validate. Returns the
/// process exit code; on failure nothing is written to the output directory.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinf

#endif  // COINF_CLI_HPP_
