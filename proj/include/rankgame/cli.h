// Copyright 2026 The rankgame Authors. All rights reserved.
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

#ifndef RANKGAME_CLI_H_
#define RANKGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rankgame {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;       // bad flags, config or parameters
inline constexpr int kExitVerifyFailed = 2;  // verify found positive regret

// Runs one command (args exclude the program name). Human-readable summary
// goes to `out`, diagnostics to `err`; machine output only to the files the
// flags name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Sets the spdlog level from RANKGAME_LOG (quiet, info, debug).
void ConfigureLogging();

}  // namespace rankgame

#endif  // RANKGAME_CLI_H_
