// Copyright 2026 The AttractorLab Authors
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

#ifndef ATTRACTORLAB_TOOLS_CLI_H_
#define ATTRACTORLAB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace attractorlab::cli {

// Exit codes. verify maps its verdict onto the first three.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitVacuous = 2;
inline constexpr int kExitError = 3;

// Runs the command line `args` (without the program name), writing the
// primary output to `out` unless --out is given and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace attractorlab::cli

#endif  // ATTRACTORLAB_TOOLS_CLI_H_
