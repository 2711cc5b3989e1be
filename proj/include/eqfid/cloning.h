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

#ifndef EQFID_CLONING_H
#define EQFID_CLONING_H

#include <optional>

#include "eqfid/numerics.h"

namespace eqfid {

/// Bloch-vector shrinking of an N -> M equatorial cloner. `m_out` is empty for
/// the M -> infinity limit.
struct ShrinkingFactor {
    int n_in = 0;
    std::optional<int> m_out;
    double value = 0.0;

    bool is_limit() const {
        return !m_out.has_value();
    }
};

/// eta(N, M) = 2^{M-N} S_N / S_M, computed as (S_N / 2^N) / (S_M / 2^M).
ShrinkingFactor eta(int n_in, int m_out);

/// lim_{M -> inf} eta(N, M) = S_N / 2^N.
ShrinkingFactor eta_inf(int n_in);

/// Probability of recovering |psi> from one infinite-ensemble clone: (1 + eta(N, inf)) / 2.
double f_eqcm(int n_in);

/// Pairwise universal CNOT reconstruction probability, (1 + eta(1, 2)) / 2 = 1/2 + 1/sqrt(8).
double f_cnot();

/// Collective N+N transformation reconstruction probability, (1 + eta(N, 2N)) / 2.
double f_gcnot(int n_copies);

/// Output of the phase-difference transformation: the control register keeps
/// phi_a, the target carries phi_b - phi_a, both shrunk by the same factor.
struct TransformationOutput {
    QubitDensityMatrix control_state;
    QubitDensityMatrix difference_state;
    Phase difference_phase;
    double shrinking = 0.0;
    int copies_per_side = 0;
};

TransformationOutput cnot_output(Phase phase_a, Phase phase_b);
TransformationOutput gcnot_output(int n_copies, Phase phase_a, Phase phase_b);

}  // namespace eqfid

#endif
