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

#ifndef EQFID_MONTECARLO_H
#define EQFID_MONTECARLO_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqfid/numerics.h"

namespace eqfid {

enum class Strategy { kMeasurement, kUnifiedPair, kUnifiedCollective };
enum class MixedMode { kAnalyticFactor, kFullMixed };

std::string to_string(Strategy s);
std::string to_string(MixedMode m);
std::optional<Strategy> parse_strategy(const std::string &text);
std::optional<MixedMode> parse_mixed_mode(const std::string &text);

/// A fixed phase, or a fresh uniform draw 2pi*u per trial when empty.
struct PhaseSource {
    std::optional<Phase> fixed;

    static PhaseSource uniform() {
        return {};
    }
    static PhaseSource at(Phase p) {
        return {p};
    }
    bool is_uniform() const {
        return !fixed.has_value();
    }
};

struct TrialConfig {
    int n_copies = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    PhaseSource phase_a;
    PhaseSource phase_b;
    Strategy strategy = Strategy::kMeasurement;
    MixedMode mixed_mode = MixedMode::kAnalyticFactor;

    /// Throws DomainError / ResourceError when the config cannot run.
    void validate() const;
};

struct TrialReport {
    std::uint64_t trials = 0;
    /// Empirical analogue of the strategy probability. In analytic-factor mode
    /// for the unified strategies this already includes the gate factor.
    double mean_overlap_product = 0.0;
    double overlap_standard_error = 0.0;
    /// Mean |F_est - F| with F = cos^2((phi_b - phi_a) / 2).
    double mean_abs_fidelity_error = 0.0;
    double fidelity_error_standard_error = 0.0;
    /// Multiplier applied to the raw sampled overlap (1 when none).
    double gate_factor = 1.0;
    /// One tally vector per measured register: (a, b) for the measurement
    /// strategy, the difference register otherwise. In full-mixed mode the last
    /// slot counts perp outcomes.
    std::vector<std::vector<std::uint64_t>> outcome_tallies;
    /// Weight outside the symmetric subspace; set only in full-mixed mode.
    std::optional<double> perp_probability;
};

/// How the trial loop is scheduled. Both produce bit-identical reports.
enum class Execution { kParallel, kSerial };

/// Strategy 1: estimate each ensemble separately and compare estimates.
TrialReport simulate_measurement(const TrialConfig &config, Execution exec = Execution::kParallel);

/// Strategy 3: estimate the phase-difference register produced by the
/// pairwise or collective transformation.
TrialReport simulate_unified(const TrialConfig &config, Execution exec = Execution::kParallel);

/// Dispatches on config.strategy.
TrialReport simulate(const TrialConfig &config, Execution exec = Execution::kParallel);

/// Closed-form probability the report should approach.
double analytic_reference(const TrialConfig &config);

/// Trials per reduction block; fixed so the summation tree does not depend on
/// the thread count.
inline constexpr std::uint64_t kTrialBlock = 4096;

}  // namespace eqfid

#endif
