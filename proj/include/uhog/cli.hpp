// Copyright 2026 The uhog Authors.
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

#ifndef UHOG_CLI_HPP_
#define UHOG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace uhog {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitGrammar = 2, kExitNoParse = 3 };

// Entry point of the `uhog` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err);

}  // namespace uhog

#endif  // UHOG_CLI_HPP_
