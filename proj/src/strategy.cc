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

#include "eqfid/strategy.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "eqfid/cloning.h"
#include "eqfid/errors.h"
#include "eqfid/povm.h"

namespace eqfid {

bool StrategyCurvePoint::satisfies_invariants(double tol) const {
    for (double p : {p_measurement, p_cloning, p_unified_pair, p_unified_collective}) {
        if (!(p > 0.0 && p <= 1.0)) {
            return false;
        }
    }
    return std::abs(p_measurement - p_cloning) <= tol && p_unified_collective > p_measurement;
}

double p_measurement(int n_copies) {
    double f = mean_fidelity_closed(n_copies);
    return f * f;
}

double p_cloning(int n_copies) {
    double f = f_eqcm(n_copies);
    return f * f;
}

double p_unified_pair(int n_copies) {
    return mean_fidelity_closed(n_copies) * f_cnot();
}

double p_unified_collective(int n_copies) {
    return mean_fidelity_closed(n_copies) * f_gcnot(n_copies);
}

double p_unified_collective_unequal(int n_a, int n_b) {
    if (n_a < 1 || n_b < 1) {
        throw DomainError("ensemble sizes must be >= 1");
    }
    int smaller = std::min(n_a, n_b);
    return mean_fidelity_closed(smaller) * 0.5 * (1.0 + eta(smaller, n_a + n_b).value);
}

EnsembleTradeoff other_ensemble_tradeoff(int n_copies) {
    double f_bar = mean_fidelity_closed(n_copies);
    return {f_bar * f_gcnot(n_copies), f_bar};
}

StrategyCurvePoint curve_point(int n_copies) {
    StrategyCurvePoint p;
    p.n_copies = n_copies;
    p.f_bar = mean_fidelity_closed(n_copies);
    p.f_eqcm = f_eqcm(n_copies);
    p.f_cnot = f_cnot();
    p.f_gcnot = f_gcnot(n_copies);
    p.p_measurement = p_measurement(n_copies);
    p.p_cloning = p_cloning(n_copies);
    p.p_unified_pair = p_unified_pair(n_copies);
    p.p_unified_collective = p_unified_collective(n_copies);
    return p;
}

std::vector<StrategyCurvePoint> curve_table(int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max || n_max > kCurveTableMax) {
        throw DomainError("curve range must satisfy 1 <= n_min <= n_max <= " + std::to_string(kCurveTableMax) +
                          ", got [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    std::vector<StrategyCurvePoint> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        rows.push_back(curve_point(n));
    }
    return rows;
}

}  // namespace eqfid
