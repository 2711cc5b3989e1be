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

#ifndef EQFID_STRATEGY_H
#define EQFID_STRATEGY_H

#include <vector>

namespace eqfid {

/// Maximum N accepted by curve_table.
inline constexpr int kCurveTableMax = 60;

/// One row of the strategy comparison table.
struct StrategyCurvePoint {
    int n_copies = 0;
    double f_bar = 0.0;
    double f_eqcm = 0.0;
    double f_cnot = 0.0;
    double f_gcnot = 0.0;
    double p_measurement = 0.0;
    double p_cloning = 0.0;
    double p_unified_pair = 0.0;
    double p_unified_collective = 0.0;

    bool satisfies_invariants(double tol = 1e-12) const;
};

/// Independent estimation of both ensembles: f_bar(N)^2.
double p_measurement(int n_copies);

/// Infinite cloning then tomography of both ensembles: f_eqcm(N)^2.
double p_cloning(int n_copies);

/// Pairwise CNOT then estimation of the N difference qubits: f_bar(N) * f_cnot.
double p_unified_pair(int n_copies);

/// Collective transformation then estimation: f_bar(N) * f_gcnot(N).
double p_unified_collective(int n_copies);

/// Unequal ensembles of sizes n_a and n_b. The smaller ensemble seeds an
/// N -> N + K transformation and fixes the number of usable difference
/// copies: f_bar(min) * (1 + eta(min, n_a + n_b)) / 2.
double p_unified_collective_unequal(int n_a, int n_b);

/// What estimating phi_a costs after the collective transformation, against
/// estimating it directly from the untouched ensemble.
struct EnsembleTradeoff {
    double p_phase_a_after_gcnot = 0.0;
    double p_phase_a_direct = 0.0;
};

EnsembleTradeoff other_ensemble_tradeoff(int n_copies);

StrategyCurvePoint curve_point(int n_copies);

/// Rows for N = n_min..n_max. Throws DomainError unless 1 <= n_min <= n_max <= kCurveTableMax.
std::vector<StrategyCurvePoint> curve_table(int n_min, int n_max);

}  // namespace eqfid

#endif
