// Copyright 2026 The Robustfair Authors.
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

#ifndef ROBUSTFAIR_TOOLS_COMMANDS_H_
#define ROBUSTFAIR_TOOLS_COMMANDS_H_

#include <ostream>

namespace robustfair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

inline constexpr char kSchema[] = "robustfair/1";
inline constexpr char kVersion[] = "1.0.0";
inline constexpr char kThreadsEnv[] = "ROBUSTFAIR_THREADS";

// Parses argv, runs one command and returns the process exit code. Reports
// go to --report or `out`; diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace robustfair::cli

#endif  // ROBUSTFAIR_TOOLS_COMMANDS_H_
