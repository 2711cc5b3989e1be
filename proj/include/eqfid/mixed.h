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

#ifndef EQFID_MIXED_H
#define EQFID_MIXED_H

#include <vector>

#include "eqfid/numerics.h"
#include "eqfid/povm.h"

namespace eqfid {

/// Compression of rho(delta, eta)^{(x)N} onto the symmetric subspace:
/// B_{nm} = <D_n| rho^{(x)N} |D_m>, an (N+1) x (N+1) Hermitian block.
/// Matrix-free: each Dicke column is pushed through the N single-qubit factors
/// in the 2^N space; columns run in parallel under OpenMP.
ComplexMatrix symmetric_block(int n_copies, Phase delta, double eta_value);

/// Outcome probabilities of the phase POVM on N copies of rho(delta, eta); the
/// weight outside the symmetric subspace goes to the perp slot.
/// Requires N <= kFullSpaceCap and 0 <= eta <= 1.
OutcomeDistribution mixed_ensemble_distribution(int n_copies, Phase delta, double eta_value);

/// Outcome distribution from an already compressed symmetric block.
OutcomeDistribution distribution_from_block(const ComplexMatrix &block);

/// Reuses the delta = 0 block for every delta, using
/// B(delta)_{nm} = e^{i(n-m) delta} B(0)_{nm}. Each lookup is O(N^2).
class MixedDistributionTable {
   public:
    MixedDistributionTable(int n_copies, double eta_value);

    OutcomeDistribution at(Phase delta) const;

    double perp_probability() const {
        return perp_;
    }

   private:
    int n_copies_;
    // diagonal_sums_[d + N] = sum_{n - m = d} B(0)_{nm}
    std::vector<Complex> diagonal_sums_;
    double perp_;
};

namespace serial {

/// Largest N accepted by the dense reference (a 2^N x 2^N matrix is built).
inline constexpr int kDenseReferenceCap = 10;

/// Reference for symmetric_block: forms rho^{(x)N} densely by Kronecker
/// products and compresses it with the Dicke embedding.
ComplexMatrix symmetric_block(int n_copies, Phase delta, double eta_value);

OutcomeDistribution mixed_ensemble_distribution(int n_copies, Phase delta, double eta_value);

}  // namespace serial

}  // namespace eqfid

#endif
