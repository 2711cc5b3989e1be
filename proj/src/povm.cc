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

#include "eqfid/povm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eqfid/errors.h"
#include "eqfid/symmetric.h"

namespace eqfid {

namespace {

void check_copies(int n_copies) {
    if (n_copies < 1) {
        throw DomainError("n_copies must be >= 1");
    }
}

}  // namespace

PovmBasis povm_basis(int n_copies) {
    check_copies(n_copies);
    const std::size_t dim = static_cast<std::size_t>(n_copies) + 1;
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    PovmBasis basis{n_copies, {}};
    basis.vectors.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Complex> v(dim);
        for (std::size_t n = 0; n < dim; ++n) {
            // Reduce k*n mod (N+1) first so the angle stays in [0, 2pi).
            double angle = kTwoPi * static_cast<double>((k * n) % dim) / static_cast<double>(dim);
            v[n] = std::polar(norm, angle);
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

double orthonormality_error(const PovmBasis &basis) {
    double err = 0.0;
    const std::size_t dim = basis.vectors.size();
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            Complex g = 0.0;
            for (std::size_t n = 0; n < dim; ++n) {
                g += std::conj(basis.vectors[j][n]) * basis.vectors[k][n];
            }
            err = std::max(err, std::abs(g - (j == k ? 1.0 : 0.0)));
        }
    }
    return err;
}

double completeness_error(const PovmBasis &basis) {
    double err = 0.0;
    const std::size_t dim = basis.vectors.size();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex s = 0.0;
            for (const auto &v : basis.vectors) {
                s += v[r] * std::conj(v[c]);
            }
            err = std::max(err, std::abs(s - (r == c ? 1.0 : 0.0)));
        }
    }
    return err;
}

double OutcomeDistribution::total() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0) + perp_probability;
}

OutcomeDistribution outcome_distribution(int n_copies, Phase phase) {
    check_copies(n_copies);
    const auto state = symmetric_state(n_copies, phase);
    const std::size_t dim = state.amplitudes.size();
    const double norm = 1.0 / static_cast<double>(dim);
    OutcomeDistribution dist;
    dist.probabilities.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Complex amp = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
            double angle = -kTwoPi * static_cast<double>((k * n) % dim) / static_cast<double>(dim);
            amp += std::polar(1.0, angle) * state.amplitudes[n];
        }
        dist.probabilities[k] = std::max(0.0, std::norm(amp) * norm);
    }
    return dist;
}

std::size_t sample_outcome(const OutcomeDistribution &dist, double u) {
    double cdf = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        if (dist.probabilities[k] > 0.0) {
            last_nonzero = k;
        }
        cdf += dist.probabilities[k];
        if (u < cdf) {
            return k;
        }
    }
    if (dist.perp_probability > 0.0) {
        return dist.probabilities.size();
    }
    // u landed in the rounding gap above the final cdf value.
    return last_nonzero;
}

Phase estimate_phase(int outcome, int n_copies) {
    check_copies(n_copies);
    if (outcome < 0 || outcome > n_copies) {
        throw DomainError("outcome " + std::to_string(outcome) + " out of range for N=" + std::to_string(n_copies));
    }
    return Phase(kTwoPi * outcome / (n_copies + 1.0));
}

double estimator_fidelity(int n_copies, Phase phase, double offset) {
    const auto basis = povm_basis(n_copies);
    const auto state = symmetric_state(n_copies, phase);
    double f = 0.0;
    for (int k = 0; k <= n_copies; ++k) {
        Complex amp = 0.0;
        const auto &v = basis.vectors[static_cast<std::size_t>(k)];
        for (std::size_t n = 0; n < v.size(); ++n) {
            amp += std::conj(v[n]) * state.amplitudes[n];
        }
        double c = std::cos(0.5 * (estimate_phase(k, n_copies).value() + offset - phase.value()));
        f += std::norm(amp) * c * c;
    }
    return f;
}

double mean_fidelity_closed(int n_copies) {
    check_copies(n_copies);
    return 0.5 + 0.5 * normalized_sqrt_binom_sum(n_copies);
}

double mean_fidelity_numeric(int n_copies, int phase_grid) {
    check_copies(n_copies);
    if (phase_grid < 1) {
        throw DomainError("phase_grid must be >= 1");
    }
    double sum = 0.0;
    for (int j = 0; j < phase_grid; ++j) {
        sum += estimator_fidelity(n_copies, Phase(kTwoPi * j / phase_grid));
    }
    return sum / phase_grid;
}

}  // namespace eqfid
