// Copyright 2026 The eqfid Authors
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

#ifndef EQFID_TOOLS_EQFID_CLI_H
#define EQFID_TOOLS_EQFID_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace eqfid::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Relative --out paths are resolved against this directory when set.
inline constexpr const char *kOutputDirEnv = "EQFID_OUTPUT_DIR";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace eqfid::cli

#endif
