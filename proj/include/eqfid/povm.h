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

#ifndef EQFID_POVM_H
#define EQFID_POVM_H

#include <cstddef>
#include <vector>

#include "eqfid/numerics.h"

namespace eqfid {

/// Discrete Fourier basis of the (N+1)-dim symmetric subspace:
/// |Psi_k> = sum_n e^{i 2pi k n / (N+1)} |n> / sqrt(N+1), k = 0..N.
struct PovmBasis {
    int n_copies = 0;
    std::vector<std::vector<Complex>> vectors;
};

PovmBasis povm_basis(int n_copies);

/// max |<Psi_j|Psi_k> - delta_jk|.
double orthonormality_error(const PovmBasis &basis);

/// max entry of |sum_k |Psi_k><Psi_k| - I|.
double completeness_error(const PovmBasis &basis);

/// Probabilities of outcomes k = 0..N. `perp_probability` is the weight found
/// outside the symmetric subspace; it is zero for pure symmetric inputs.
struct OutcomeDistribution {
    std::vector<double> probabilities;
    double perp_probability = 0.0;

    double total() const;
};

/// p_k = |<Psi_k|psi(phi)^{(x)N}>|^2.
OutcomeDistribution outcome_distribution(int n_copies, Phase phase);

/// Index of the outcome selected by inverse CDF at u in [0, 1). Returns
/// probabilities.size() when u falls into the perp slot.
std::size_t sample_outcome(const OutcomeDistribution &dist, double u);

/// Phase guess attached to outcome k: 2pi k / (N + 1).
Phase estimate_phase(int outcome, int n_copies);

/// Expected overlap sum_k p_k(phi) cos^2((phi_k + offset - phi) / 2) for a
/// fixed true phase; `offset` shifts every estimate by the same amount. Not
/// constant in phi: it oscillates as cos((N+1) phi) around the mean fidelity.
double estimator_fidelity(int n_copies, Phase phase, double offset = 0.0);

/// 1/2 + 2^{-(N+1)} sum_i sqrt(C(N,i) C(N,i+1)).
double mean_fidelity_closed(int n_copies);

/// Average of estimator_fidelity over `phase_grid` equally spaced phases,
/// evaluated by explicit projection onto the basis vectors. The integrand has
/// period 2pi/(N+1) and only the Fourier modes 0 and +-(N+1), so the grid
/// average equals the continuous phase average whenever phase_grid does not
/// divide N+1 (phase_grid = N+2 is the smallest grid that always works).
double mean_fidelity_numeric(int n_copies, int phase_grid);

}  // namespace eqfid

#endif
