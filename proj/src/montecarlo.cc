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

#include "eqfid/montecarlo.h"

#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "eqfid/cloning.h"
#include "eqfid/errors.h"
#include "eqfid/mixed.h"
#include "eqfid/povm.h"
#include "eqfid/rng.h"
#include "eqfid/strategy.h"
#include "eqfid/symmetric.h"

namespace eqfid {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::kMeasurement:
            return "measurement";
        case Strategy::kUnifiedPair:
            return "unified-pair";
        case Strategy::kUnifiedCollective:
            return "unified-collective";
    }
    return "?";
}

std::string to_string(MixedMode m) {
    return m == MixedMode::kFullMixed ? "full" : "analytic";
}

std::optional<Strategy> parse_strategy(const std::string &text) {
    if (text == "measurement") {
        return Strategy::kMeasurement;
    }
    if (text == "unified-pair") {
        return Strategy::kUnifiedPair;
    }
    if (text == "unified-collective") {
        return Strategy::kUnifiedCollective;
    }
    return std::nullopt;
}

std::optional<MixedMode> parse_mixed_mode(const std::string &text) {
    if (text == "analytic") {
        return MixedMode::kAnalyticFactor;
    }
    if (text == "full") {
        return MixedMode::kFullMixed;
    }
    return std::nullopt;
}

void TrialConfig::validate() const {
    if (n_copies < 1) {
        throw DomainError("n_copies must be >= 1");
    }
    if (trials < 1) {
        throw DomainError("trials must be >= 1");
    }
    if (mixed_mode == MixedMode::kFullMixed && n_copies > kFullSpaceCap) {
        throw ResourceError("full-mixed mode is capped at N=" + std::to_string(kFullSpaceCap) +
                            ", got N=" + std::to_string(n_copies));
    }
}

double analytic_reference(const TrialConfig &config) {
    switch (config.strategy) {
        case Strategy::kMeasurement:
            return p_measurement(config.n_copies);
        case Strategy::kUnifiedPair:
            return p_unified_pair(config.n_copies);
        case Strategy::kUnifiedCollective:
            return p_unified_collective(config.n_copies);
    }
    return 0.0;
}

namespace {

struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const {
        return sum + carry;
    }
};

struct Sample {
    double overlap = 0.0;
    double abs_error = 0.0;
    std::array<std::size_t, 2> outcomes{};
};

struct BlockSums {
    CompensatedSum overlap;
    CompensatedSum overlap_sq;
    CompensatedSum error;
    CompensatedSum error_sq;
    std::vector<std::vector<std::uint64_t>> tallies;
};

double half_angle_cos_sq(double angle) {
    double c = std::cos(0.5 * angle);
    return c * c;
}

Phase draw_phase(const PhaseSource &source, TrialStream &stream) {
    return source.fixed ? *source.fixed : Phase(kTwoPi * stream.uniform());
}

double standard_error(double sum, double sum_sq, std::uint64_t n) {
    if (n < 2) {
        return 0.0;
    }
    double nd = static_cast<double>(n);
    double mean = sum / nd;
    double var = (sum_sq - nd * mean * mean) / (nd - 1.0);
    return var > 0.0 ? std::sqrt(var / nd) : 0.0;
}

/// Runs `kernel(stream)` for every trial in fixed-size blocks and reduces the
/// block partials in block order.
template <typename Kernel>
TrialReport run_trials(const TrialConfig &config, const std::vector<std::size_t> &tally_sizes, const Kernel &kernel,
                       Execution exec) {
    const std::uint64_t n_blocks = (config.trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<BlockSums> blocks(n_blocks);

    auto run_block = [&](std::uint64_t b) {
        BlockSums &sums = blocks[b];
        sums.tallies.clear();
        for (std::size_t size : tally_sizes) {
            sums.tallies.emplace_back(size, 0);
        }
        const std::uint64_t begin = b * kTrialBlock;
        const std::uint64_t end = std::min(config.trials, begin + kTrialBlock);
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialStream stream(config.seed, t);
            Sample s = kernel(stream);
            sums.overlap.add(s.overlap);
            sums.overlap_sq.add(s.overlap * s.overlap);
            sums.error.add(s.abs_error);
            sums.error_sq.add(s.abs_error * s.abs_error);
            for (std::size_t r = 0; r < sums.tallies.size(); ++r) {
                ++sums.tallies[r][s.outcomes[r]];
            }
        }
    };

    if (exec == Execution::kParallel) {
        const auto count = static_cast<std::int64_t>(n_blocks);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < count; ++b) {
            run_block(static_cast<std::uint64_t>(b));
        }
    } else {
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            run_block(b);
        }
    }

    CompensatedSum overlap, overlap_sq, error, error_sq;
    TrialReport report;
    report.trials = config.trials;
    for (std::size_t size : tally_sizes) {
        report.outcome_tallies.emplace_back(size, 0);
    }
    for (const auto &block : blocks) {
        overlap.add(block.overlap.value());
        overlap_sq.add(block.overlap_sq.value());
        error.add(block.error.value());
        error_sq.add(block.error_sq.value());
        for (std::size_t r = 0; r < block.tallies.size(); ++r) {
            for (std::size_t k = 0; k < block.tallies[r].size(); ++k) {
                report.outcome_tallies[r][k] += block.tallies[r][k];
            }
        }
    }
    const double n = static_cast<double>(config.trials);
    report.mean_overlap_product = overlap.value() / n;
    report.overlap_standard_error = standard_error(overlap.value(), overlap_sq.value(), config.trials);
    report.mean_abs_fidelity_error = error.value() / n;
    report.fidelity_error_standard_error = standard_error(error.value(), error_sq.value(), config.trials);
    return report;
}

/// Outcome distribution for one register, cached when the phase is fixed.
class PureRegister {
   public:
    PureRegister(int n_copies, const PhaseSource &source) : n_copies_(n_copies) {
        if (source.fixed) {
            cached_ = outcome_distribution(n_copies, *source.fixed);
        }
    }

    OutcomeDistribution at(Phase phase) const {
        return cached_ ? *cached_ : outcome_distribution(n_copies_, phase);
    }

   private:
    int n_copies_;
    std::optional<OutcomeDistribution> cached_;
};

}  // namespace

TrialReport simulate_measurement(const TrialConfig &config, Execution exec) {
    config.validate();
    if (config.strategy != Strategy::kMeasurement) {
        throw UsageError("simulate_measurement called with strategy " + to_string(config.strategy));
    }
    const int n = config.n_copies;
    const PureRegister reg_a(n, config.phase_a);
    const PureRegister reg_b(n, config.phase_b);

    auto kernel = [&](TrialStream &stream) {
        Phase phi_a = draw_phase(config.phase_a, stream);
        Phase phi_b = draw_phase(config.phase_b, stream);
        std::size_t k_a = sample_outcome(reg_a.at(phi_a), stream.uniform());
        std::size_t k_b = sample_outcome(reg_b.at(phi_b), stream.uniform());
        Phase est_a = estimate_phase(static_cast<int>(k_a), n);
        Phase est_b = estimate_phase(static_cast<int>(k_b), n);
        Sample s;
        s.overlap = half_angle_cos_sq(est_a.value() - phi_a.value()) * half_angle_cos_sq(est_b.value() - phi_b.value());
        s.abs_error = std::abs(pure_fidelity(est_a, est_b) - pure_fidelity(phi_a, phi_b));
        s.outcomes = {k_a, k_b};
        return s;
    };
    const auto slots = static_cast<std::size_t>(n) + 1;
    return run_trials(config, {slots, slots}, kernel, exec);
}

TrialReport simulate_unified(const TrialConfig &config, Execution exec) {
    config.validate();
    if (config.strategy == Strategy::kMeasurement) {
        throw UsageError("simulate_unified called with the measurement strategy");
    }
    const int n = config.n_copies;
    const bool pair = config.strategy == Strategy::kUnifiedPair;
    const bool full_mixed = config.mixed_mode == MixedMode::kFullMixed;
    const double shrinking = pair ? eta(1, 2).value : eta(n, 2 * n).value;
    const double gate = pair ? f_cnot() : f_gcnot(n);

    std::unique_ptr<MixedDistributionTable> table;
    if (full_mixed) {
        table = std::make_unique<MixedDistributionTable>(n, shrinking);
    }

    // The difference phase is fixed only when both inputs are.
    std::optional<OutcomeDistribution> cached;
    if (config.phase_a.fixed && config.phase_b.fixed) {
        Phase delta = phase_difference(*config.phase_b.fixed, *config.phase_a.fixed);
        cached = full_mixed ? table->at(delta) : outcome_distribution(n, delta);
    }

    auto kernel = [&](TrialStream &stream) {
        Phase phi_a = draw_phase(config.phase_a, stream);
        Phase phi_b = draw_phase(config.phase_b, stream);
        Phase delta = phase_difference(phi_b, phi_a);
        const OutcomeDistribution dist =
            cached ? *cached : (full_mixed ? table->at(delta) : outcome_distribution(n, delta));
        std::size_t k = sample_outcome(dist, stream.uniform());
        // A perp outcome carries no phase information; guess uniformly.
        Phase est = k > static_cast<std::size_t>(n) ? Phase(kTwoPi * stream.uniform())
                                                     : estimate_phase(static_cast<int>(k), n);
        Sample s;
        s.overlap = half_angle_cos_sq(est.value() - delta.value());
        s.abs_error = std::abs(half_angle_cos_sq(est.value()) - half_angle_cos_sq(delta.value()));
        s.outcomes = {k, 0};
        return s;
    };
    const auto slots = static_cast<std::size_t>(n) + (full_mixed ? 2 : 1);
    TrialReport report = run_trials(config, {slots}, kernel, exec);
    if (full_mixed) {
        report.perp_probability = table->perp_probability();
    } else {
        report.gate_factor = gate;
        report.mean_overlap_product *= gate;
        report.overlap_standard_error *= gate;
    }
    return report;
}

TrialReport simulate(const TrialConfig &config, Execution exec) {
    return config.strategy == Strategy::kMeasurement ? simulate_measurement(config, exec)
                                                     : simulate_unified(config, exec);
}

}  // namespace eqfid
