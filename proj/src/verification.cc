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

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "eqfid/cloning.h"
#include "eqfid/errors.h"
#include "eqfid/mixed.h"
#include "eqfid/povm.h"
#include "eqfid/strategy.h"

namespace eqfid {

namespace {

// Each check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string(int)>;

std::string check_povm_structure(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        auto basis = povm_basis(n);
        double ortho = orthonormality_error(basis);
        double complete = completeness_error(basis);
        if (ortho > 1e-12 || complete > 1e-12) {
            return fmt::format("N={} orthonormality {:.3g} completeness {:.3g}", n, ortho, complete);
        }
    }
    return {};
}

std::string check_distribution_normalization(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int j = 0; j < 64; ++j) {
            double total = outcome_distribution(n, Phase(kTwoPi * j / 64)).total();
            if (std::abs(total - 1.0) > 1e-10) {
                return fmt::format("N={} grid point {} sums to {:.17g}", n, j, total);
            }
        }
    }
    return {};
}

std::string check_mean_fidelity(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        double closed = mean_fidelity_closed(n);
        // N+2 is the smallest grid that never aliases the period-2pi/(N+1) integrand.
        for (int grid : {n + 2, 64}) {
            double numeric = mean_fidelity_numeric(n, grid);
            if (std::abs(numeric - closed) > 1e-10) {
                return fmt::format("N={} grid={} numeric {:.17g} closed {:.17g}", n, grid, numeric, closed);
            }
        }
    }
    return {};
}

std::string check_strategy_equivalence(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        double gap = std::abs(p_measurement(n) - p_cloning(n));
        if (gap > 1e-12) {
            return fmt::format("N={} |p_measurement - p_cloning| = {:.3g}", n, gap);
        }
    }
    return {};
}

std::string check_eta_monotonicity(int n_max) {
    for (int n = 1; n <= std::min(n_max, 10); ++n) {
        for (int m = n; m < 4 * n; ++m) {
            if (!(eta(n, m + 1).value < eta(n, m).value)) {
                return fmt::format("eta({}, {}) does not drop below eta({}, {})", n, m + 1, n, m);
            }
        }
    }
    for (int n = 1; n < std::min(n_max, 25); ++n) {
        if (!(eta(n + 1, 2 * n + 2).value > eta(n, 2 * n).value)) {
            return fmt::format("eta(N, 2N) not increasing at N={}", n);
        }
    }
    return {};
}

std::string check_eta_bound(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        if (!(eta(n, 2 * n).value > eta_inf(n).value)) {
            return fmt::format("eta({}, {}) <= eta({}, inf)", n, 2 * n, n);
        }
    }
    return {};
}

std::string check_collective_ordering(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        if (!(p_unified_collective(n) > p_measurement(n))) {
            return fmt::format("N={} collective strategy not above measurement", n);
        }
        if (n > 1 && !(p_measurement(n) > p_measurement(n - 1) && p_unified_collective(n) > p_unified_collective(n - 1))) {
            return fmt::format("N={} probabilities not increasing", n);
        }
    }
    return {};
}

std::string check_pair_crossover(int n_max) {
    if (!(p_unified_pair(1) > p_measurement(1))) {
        return "pairwise strategy does not win at N=1";
    }
    if (n_max >= 2 && std::abs(p_unified_pair(2) - p_measurement(2)) > 1e-12) {
        return "no tie at N=2";
    }
    for (int n = 3; n <= n_max; ++n) {
        if (!(p_unified_pair(n) < p_measurement(n))) {
            return fmt::format("pairwise strategy not below measurement at N={}", n);
        }
    }
    return {};
}

std::string check_mixed_normalization(int n_max) {
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        for (int e = 0; e <= 10; ++e) {
            for (int j = 0; j < 8; ++j) {
                double total = mixed_ensemble_distribution(n, Phase(kTwoPi * j / 8), e / 10.0).total();
                if (std::abs(total - 1.0) > 1e-10) {
                    return fmt::format("N={} eta={} total {:.17g}", n, e / 10.0, total);
                }
            }
        }
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(int n_max) {
    if (n_max < 1 || n_max > kCurveTableMax) {
        throw DomainError(fmt::format("n_max must lie in [1, {}], got {}", kCurveTableMax, n_max));
    }
    const std::vector<std::pair<std::string, Check>> checks = {
        {"povm_orthonormal_complete", check_povm_structure},
        {"outcome_distribution_normalized", check_distribution_normalization},
        {"mean_fidelity_closed_vs_numeric", check_mean_fidelity},
        {"measurement_cloning_equivalence", check_strategy_equivalence},
        {"eta_monotonicity", check_eta_monotonicity},
        {"eta_collective_above_limit", check_eta_bound},
        {"collective_above_measurement", check_collective_ordering},
        {"pairwise_crossover", check_pair_crossover},
        {"mixed_ensemble_normalized", check_mixed_normalization},
    };
    std::vector<CheckResult> results;
    for (const auto &[name, check] : checks) {
        std::string failure = check(n_max);
        results.push_back({name, failure.empty(), failure});
    }
    return results;
}

}  // namespace eqfid
