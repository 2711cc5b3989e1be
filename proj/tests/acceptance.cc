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

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "eqfid/cloning.h"
#include "eqfid/mixed.h"
#include "eqfid/montecarlo.h"
#include "eqfid/povm.h"
#include "eqfid/strategy.h"

using namespace eqfid;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome closed_form_mean_fidelity() {
    Outcome o;
    auto start = Clock::now();
    double worst = 0;
    for (int n = 1; n <= 30; ++n) {
        for (int grid : {n + 2, 64}) {
            double gap = std::abs(mean_fidelity_numeric(n, grid) - mean_fidelity_closed(n));
            worst = std::max(worst, gap);
            o.require(gap <= 1e-10, fmt::format("N={} grid={} gap {:.3g}", n, grid, gap));
        }
    }
    double t = seconds_since(start);
    o.require(mean_fidelity_closed(1) == 0.75, "N=1 is not exactly 3/4");
    o.require(t < 5.0, fmt::format("runtime {:.2f}s >= 5s", t));
    if (o.passed) {
        o.detail = fmt::format("max gap {:.3g}, {:.3f}s", worst, t);
    }
    return o;
}

Outcome cnot_value() {
    Outcome o;
    double f = f_cnot();
    // eta(1, 2) = 2^{2-1} S_1 / S_2 with S_1 = 1, S_2 = sqrt(1*2) + sqrt(2*1).
    double eta12 = 2.0 * 1.0 / (std::sqrt(2.0) + std::sqrt(2.0));
    o.require(std::abs(f - 0.8535533905932738) <= 1e-12, fmt::format("f_cnot = {:.17g}", f));
    o.require(std::abs(f - (1 + eta12) / 2) <= 1e-15, "f_cnot differs from (1 + eta(1,2)) / 2");
    if (o.passed) {
        o.detail = fmt::format("f_cnot = {:.17g}", f);
    }
    return o;
}

Outcome strategy_equivalence() {
    Outcome o;
    auto start = Clock::now();
    double worst = 0;
    for (int n = 1; n <= 50; ++n) {
        double gap = std::abs(p_measurement(n) - p_cloning(n));
        worst = std::max(worst, gap);
        o.require(gap <= 1e-12, fmt::format("N={} gap {:.3g}", n, gap));
    }
    double t = seconds_since(start);
    o.require(t < 1.0, fmt::format("runtime {:.2f}s >= 1s", t));
    if (o.passed) {
        o.detail = fmt::format("max gap {:.3g}, {:.4f}s", worst, t);
    }
    return o;
}

Outcome collective_ordering() {
    Outcome o;
    for (int n = 1; n <= 50; ++n) {
        o.require(p_unified_collective(n) > p_measurement(n), fmt::format("not above at N={}", n));
        if (n > 1) {
            o.require(p_measurement(n) > p_measurement(n - 1), fmt::format("p_measurement not increasing at N={}", n));
            o.require(p_unified_collective(n) > p_unified_collective(n - 1),
                      fmt::format("p_unified_collective not increasing at N={}", n));
        }
    }
    double gap5 = p_unified_collective(5) - p_measurement(5);
    double gap50 = p_unified_collective(50) - p_measurement(50);
    o.require(gap50 < gap5, fmt::format("gap(50) {:.3g} >= gap(5) {:.3g}", gap50, gap5));
    if (o.passed) {
        o.detail = fmt::format("gap(5) {:.4g}, gap(50) {:.4g}", gap5, gap50);
    }
    return o;
}

Outcome pairwise_crossover() {
    Outcome o;
    double d1 = p_unified_pair(1) - p_measurement(1);
    o.require(std::abs(d1 - 0.0776650429) <= 1e-9, fmt::format("N=1 advantage {:.12f}", d1));
    double d2 = std::abs(p_unified_pair(2) - p_measurement(2));
    o.require(d2 <= 1e-12, fmt::format("N=2 tie broken by {:.3g}", d2));
    for (int n = 3; n <= 50; ++n) {
        o.require(p_unified_pair(n) < p_measurement(n), fmt::format("pairwise not below at N={}", n));
    }
    if (o.passed) {
        o.detail = fmt::format("N=1 advantage {:.10f}, N=2 |diff| {:.3g}", d1, d2);
    }
    return o;
}

bool same_report(const TrialReport &a, const TrialReport &b) {
    return a.mean_overlap_product == b.mean_overlap_product && a.overlap_standard_error == b.overlap_standard_error &&
           a.mean_abs_fidelity_error == b.mean_abs_fidelity_error &&
           a.fidelity_error_standard_error == b.fidelity_error_standard_error &&
           a.outcome_tallies == b.outcome_tallies && a.perp_probability == b.perp_probability;
}

Outcome monte_carlo() {
    Outcome o;
    struct Case {
        Strategy strategy;
        int n;
    };
    std::string summary;
    for (const auto &c : {Case{Strategy::kMeasurement, 1}, Case{Strategy::kMeasurement, 2},
                          Case{Strategy::kUnifiedCollective, 2}}) {
        TrialConfig config;
        config.strategy = c.strategy;
        config.n_copies = c.n;
        config.trials = 1000000;
        config.seed = 42;
        auto start = Clock::now();
        auto report = simulate(config);
        double t = seconds_since(start);
        auto rerun = simulate(config);
        double expected = analytic_reference(config);
        double z = std::abs(report.mean_overlap_product - expected) / report.overlap_standard_error;
        std::string label = fmt::format("{} N={}", to_string(c.strategy), c.n);
        o.require(z <= 3.0, fmt::format("{}: {:.6f} vs {:.6f} ({:.2f} SE)", label, report.mean_overlap_product,
                                        expected, z));
        o.require(same_report(report, rerun), label + ": rerun not identical");
        o.require(t < 30.0, fmt::format("{}: {:.1f}s >= 30s", label, t));
        summary += fmt::format("{}{} {:.2f}SE {:.2f}s", summary.empty() ? "" : "; ", label, z, t);
    }
    if (o.passed) {
        o.detail = summary;
    }
    return o;
}

Outcome povm_structure() {
    Outcome o;
    double ortho = 0, complete = 0, norm = 0;
    for (int n = 1; n <= 30; ++n) {
        auto basis = povm_basis(n);
        ortho = std::max(ortho, orthonormality_error(basis));
        complete = std::max(complete, completeness_error(basis));
        for (int j = 0; j < 64; ++j) {
            norm = std::max(norm, std::abs(outcome_distribution(n, Phase(kTwoPi * j / 64)).total() - 1.0));
        }
    }
    o.require(ortho <= 1e-12, fmt::format("orthonormality error {:.3g}", ortho));
    o.require(complete <= 1e-12, fmt::format("completeness error {:.3g}", complete));
    o.require(norm <= 1e-10, fmt::format("normalization error {:.3g}", norm));
    if (o.passed) {
        o.detail = fmt::format("ortho {:.2g}, complete {:.2g}, norm {:.2g}", ortho, complete, norm);
    }
    return o;
}

Outcome mixed_sanity() {
    Outcome o;
    auto start = Clock::now();
    for (int n = 1; n <= 6; ++n) {
        for (int j = 0; j < 16; ++j) {
            Phase delta(kTwoPi * j / 16);
            auto mixed = mixed_ensemble_distribution(n, delta, 1.0);
            auto pure = outcome_distribution(n, delta);
            o.require(mixed.perp_probability <= 1e-10, fmt::format("N={} perp {:.3g} at eta=1", n,
                                                                   mixed.perp_probability));
            for (int k = 0; k <= n; ++k) {
                double gap = std::abs(mixed.probabilities[static_cast<std::size_t>(k)] -
                                      pure.probabilities[static_cast<std::size_t>(k)]);
                o.require(gap <= 1e-10, fmt::format("N={} k={} eta=1 gap {:.3g}", n, k, gap));
            }
            for (int e = 0; e <= 10; ++e) {
                double total = mixed_ensemble_distribution(n, delta, e / 10.0).total();
                o.require(std::abs(total - 1.0) <= 1e-10, fmt::format("N={} eta={} total {:.17g}", n, e / 10.0, total));
            }
        }
    }
    double perp = mixed_ensemble_distribution(2, Phase(0), 0.0).perp_probability;
    o.require(std::abs(perp - 0.25) <= 1e-10, fmt::format("N=2 eta=0 perp {:.17g}", perp));
    double t = seconds_since(start);
    o.require(t < 60.0, fmt::format("runtime {:.1f}s >= 60s", t));
    if (o.passed) {
        o.detail = fmt::format("perp(N=2, eta=0) = {:.17g}, {:.3f}s", perp, t);
    }
    return o;
}

Outcome eta_properties() {
    Outcome o;
    for (int n = 1; n <= 60; ++n) {
        o.require(eta(n, n).value == 1.0, fmt::format("eta({0},{0}) != 1", n));
    }
    for (int n = 1; n <= 10; ++n) {
        for (int m = n; m < 4 * n; ++m) {
            o.require(eta(n, m + 1).value < eta(n, m).value, fmt::format("eta({},{}) not decreasing", n, m + 1));
        }
    }
    for (int n = 1; n <= 50; ++n) {
        double limit = normalized_sqrt_binom_sum(n);
        o.require(eta(n, 2 * n).value > limit, fmt::format("eta({},{}) <= S_N/2^N", n, 2 * n));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 closed-form mean fidelity vs numeric, N=1..30", closed_form_mean_fidelity},
        {"2 f_cnot = 1/2 + 1/sqrt(8)", cnot_value},
        {"3 measurement/cloning equivalence, N=1..50", strategy_equivalence},
        {"4 collective strategy above measurement, N=1..50", collective_ordering},
        {"5 pairwise crossover at N=1, tie at N=2", pairwise_crossover},
        {"6 Monte Carlo agreement and reproducibility", monte_carlo},
        {"7 POVM orthonormality/completeness, N=1..30", povm_structure},
        {"8 mixed-ensemble distribution sanity", mixed_sanity},
        {"9 shrinking factor properties", eta_properties},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o = run();
        std::printf("[%s] %s%s%s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        failures += !o.passed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
