// Copyright 2026 The MoSim Authors.
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

#ifndef MOSIM_CLI_H_
#define MOSIM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mosim {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoRun = 3;

// Runs the `mosim` command line. `args` excludes the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mosim

#endif  // MOSIM_CLI_H_
