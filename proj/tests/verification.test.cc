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

#include "eqfid/verification.h"

#include "eqfid/errors.h"
#include "gtest/gtest.h"

using namespace eqfid;

TEST(run_invariant_suite, passes_and_names_checks) {
    for (int n_max : {1, 2, 3, 30}) {
        auto results = run_invariant_suite(n_max);
        EXPECT_GE(results.size(), 6u);
        for (const auto &r : results) {
            EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
            EXPECT_FALSE(r.name.empty());
        }
    }
}

TEST(run_invariant_suite, rejects_bad_range) {
    EXPECT_THROW(run_invariant_suite(0), DomainError);
    EXPECT_THROW(run_invariant_suite(61), DomainError);
}
