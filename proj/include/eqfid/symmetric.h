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

#ifndef EQFID_SYMMETRIC_H
#define EQFID_SYMMETRIC_H

#include <vector>

#include "eqfid/numerics.h"

namespace eqfid {

/// Largest N for which the full 2^N-dimensional space is ever materialized.
inline constexpr int kFullSpaceCap = 12;

/// |psi(phi)>^{(x)N} written in the Dicke basis |n>, n = 0..N, where |n> is the
/// normalized sum of all N-bit strings of Hamming weight n. Component n is
/// sqrt(C(N, n)) e^{i n phi} / 2^{N/2}.
struct SymmetricState {
    int n_copies = 0;
    std::vector<Complex> amplitudes;

    double norm_squared() const;
};

SymmetricState symmetric_state(int n_copies, Phase phase);

/// <a|b> in the symmetric representation.
Complex inner_product(const SymmetricState &a, const SymmetricState &b);

/// Isometry from the (N+1)-dim symmetric subspace into the 2^N-dim space.
/// Row index is the computational basis string (bit q = qubit q), column n is
/// the Dicke state of weight n. Throws ResourceError above kFullSpaceCap.
ComplexMatrix dicke_embedding(int n_copies);

/// Full-space amplitudes of a symmetric state (same bit convention as above).
std::vector<Complex> embed(const SymmetricState &state);

}  // namespace eqfid

#endif
