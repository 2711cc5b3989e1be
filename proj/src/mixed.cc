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

#include "eqfid/mixed.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "eqfid/errors.h"
#include "eqfid/symmetric.h"

namespace eqfid {

namespace {

void check_mixed_args(int n_copies, double eta_value) {
    if (n_copies < 1) {
        throw DomainError("n_copies must be >= 1");
    }
    if (n_copies > kFullSpaceCap) {
        throw ResourceError("mixed-ensemble simulation capped at N=" + std::to_string(kFullSpaceCap) +
                            ", got N=" + std::to_string(n_copies));
    }
    if (!(eta_value >= 0.0 && eta_value <= 1.0)) {
        throw DomainError("shrinking factor must lie in [0, 1]");
    }
}

// Applies the same 2x2 operator to every qubit of a 2^N vector in place.
void apply_to_each_qubit(std::vector<Complex> &v, int n_qubits, const QubitDensityMatrix &op) {
    const std::size_t dim = v.size();
    for (int q = 0; q < n_qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t x = 0; x < dim; ++x) {
            if (x & bit) {
                continue;
            }
            Complex lo = v[x];
            Complex hi = v[x | bit];
            v[x] = op(0, 0) * lo + op(0, 1) * hi;
            v[x | bit] = op(1, 0) * lo + op(1, 1) * hi;
        }
    }
}

}  // namespace

ComplexMatrix symmetric_block(int n_copies, Phase delta, double eta_value) {
    check_mixed_args(n_copies, eta_value);
    const QubitDensityMatrix rho = clone_state(delta, eta_value);
    const std::size_t dim = std::size_t{1} << n_copies;
    const int cols = n_copies + 1;
    std::vector<double> inv_sqrt_binom(static_cast<std::size_t>(cols));
    for (int n = 0; n < cols; ++n) {
        inv_sqrt_binom[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(static_cast<double>(binom(n_copies, n)));
    }

    ComplexMatrix block(static_cast<std::size_t>(cols), static_cast<std::size_t>(cols));
#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m < cols; ++m) {
        std::vector<Complex> v(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            if (std::popcount(x) == m) {
                v[x] = inv_sqrt_binom[static_cast<std::size_t>(m)];
            }
        }
        apply_to_each_qubit(v, n_copies, rho);
        std::vector<Complex> column(static_cast<std::size_t>(cols));
        for (std::size_t x = 0; x < dim; ++x) {
            column[static_cast<std::size_t>(std::popcount(x))] += v[x];
        }
        for (int n = 0; n < cols; ++n) {
            block(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) =
                column[static_cast<std::size_t>(n)] * inv_sqrt_binom[static_cast<std::size_t>(n)];
        }
    }
    return block;
}

OutcomeDistribution distribution_from_block(const ComplexMatrix &block) {
    const std::size_t dim = block.rows;
    const auto basis = povm_basis(static_cast<int>(dim) - 1);
    OutcomeDistribution dist;
    dist.probabilities.resize(dim);
    double captured = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const auto &psi = basis.vectors[k];
        Complex acc = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
            Complex row = 0.0;
            for (std::size_t m = 0; m < dim; ++m) {
                row += block(n, m) * psi[m];
            }
            acc += std::conj(psi[n]) * row;
        }
        dist.probabilities[k] = std::max(0.0, acc.real());
        captured += dist.probabilities[k];
    }
    dist.perp_probability = std::max(0.0, 1.0 - captured);
    return dist;
}

OutcomeDistribution mixed_ensemble_distribution(int n_copies, Phase delta, double eta_value) {
    return distribution_from_block(symmetric_block(n_copies, delta, eta_value));
}

MixedDistributionTable::MixedDistributionTable(int n_copies, double eta_value)
    : n_copies_(n_copies), diagonal_sums_(2 * static_cast<std::size_t>(n_copies) + 1) {
    const auto block = symmetric_block(n_copies, Phase(0.0), eta_value);
    double trace = 0.0;
    for (int n = 0; n <= n_copies; ++n) {
        trace += block(static_cast<std::size_t>(n), static_cast<std::size_t>(n)).real();
        for (int m = 0; m <= n_copies; ++m) {
            diagonal_sums_[static_cast<std::size_t>(n - m + n_copies)] +=
                block(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        }
    }
    perp_ = std::max(0.0, 1.0 - trace);
}

OutcomeDistribution MixedDistributionTable::at(Phase delta) const {
    // p_k = (1 / (N+1)) sum_d g(d) e^{i d (delta - theta_k)}, theta_k = 2pi k / (N+1)
    const int dim = n_copies_ + 1;
    OutcomeDistribution dist;
    dist.probabilities.resize(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        const double angle = delta.value() - kTwoPi * k / dim;
        double p = 0.0;
        for (int d = -n_copies_; d <= n_copies_; ++d) {
            p += (diagonal_sums_[static_cast<std::size_t>(d + n_copies_)] * std::polar(1.0, d * angle)).real();
        }
        dist.probabilities[static_cast<std::size_t>(k)] = std::max(0.0, p / dim);
    }
    dist.perp_probability = perp_;
    return dist;
}

}  // namespace eqfid
