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

#ifndef EQFID_VERIFICATION_H
#define EQFID_VERIFICATION_H

#include <string>
#include <vector>

namespace eqfid {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-module invariant checks over N = 1..n_max (1 <= n_max <= 60).
std::vector<CheckResult> run_invariant_suite(int n_max);

}  // namespace eqfid

#endif
