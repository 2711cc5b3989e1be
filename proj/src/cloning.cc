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

#include "eqfid/cloning.h"

#include "eqfid/errors.h"

namespace eqfid {

ShrinkingFactor eta(int n_in, int m_out) {
    if (n_in < 1) {
        throw DomainError("eta requires n_in >= 1");
    }
    if (n_in > m_out) {
        throw DomainError("eta requires n_in <= m_out");
    }
    return {n_in, m_out, normalized_sqrt_binom_sum(n_in) / normalized_sqrt_binom_sum(m_out)};
}

ShrinkingFactor eta_inf(int n_in) {
    if (n_in < 1) {
        throw DomainError("eta_inf requires n_in >= 1");
    }
    return {n_in, std::nullopt, normalized_sqrt_binom_sum(n_in)};
}

double f_eqcm(int n_in) {
    return 0.5 * (1.0 + eta_inf(n_in).value);
}

double f_cnot() {
    return 0.5 * (1.0 + eta(1, 2).value);
}

double f_gcnot(int n_copies) {
    if (n_copies < 1) {
        throw DomainError("f_gcnot requires n_copies >= 1");
    }
    return 0.5 * (1.0 + eta(n_copies, 2 * n_copies).value);
}

namespace {

TransformationOutput make_output(int copies, double shrinking, Phase phase_a, Phase phase_b) {
    Phase diff = phase_difference(phase_b, phase_a);
    return {clone_state(phase_a, shrinking), clone_state(diff, shrinking), diff, shrinking, copies};
}

}  // namespace

TransformationOutput cnot_output(Phase phase_a, Phase phase_b) {
    return make_output(1, eta(1, 2).value, phase_a, phase_b);
}

TransformationOutput gcnot_output(int n_copies, Phase phase_a, Phase phase_b) {
    if (n_copies < 1) {
        throw DomainError("gcnot_output requires n_copies >= 1");
    }
    return make_output(n_copies, eta(n_copies, 2 * n_copies).value, phase_a, phase_b);
}

}  // namespace eqfid
