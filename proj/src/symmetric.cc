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

#include "eqfid/symmetric.h"

#include <bit>
#include <cmath>
#include <string>

#include "eqfid/errors.h"

namespace eqfid {

namespace {

void check_full_space(int n_copies) {
    if (n_copies < 1) {
        throw DomainError("n_copies must be >= 1");
    }
    if (n_copies > kFullSpaceCap) {
        throw ResourceError("full-space simulation capped at N=" + std::to_string(kFullSpaceCap) +
                            ", got N=" + std::to_string(n_copies));
    }
}

}  // namespace

double SymmetricState::norm_squared() const {
    double s = 0.0;
    for (const auto &c : amplitudes) {
        s += std::norm(c);
    }
    return s;
}

SymmetricState symmetric_state(int n_copies, Phase phase) {
    if (n_copies < 1) {
        throw DomainError("symmetric_state requires n_copies >= 1");
    }
    SymmetricState state{n_copies, {}};
    state.amplitudes.reserve(static_cast<std::size_t>(n_copies) + 1);
    const double log_scale = -0.5 * n_copies * std::log(2.0);
    for (int n = 0; n <= n_copies; ++n) {
        double magnitude = n_copies <= kExactBinomialCap
                               ? std::sqrt(static_cast<double>(binom(n_copies, n))) * std::pow(2.0, -0.5 * n_copies)
                               : std::exp(0.5 * log_binom(n_copies, n) + log_scale);
        state.amplitudes.push_back(std::polar(magnitude, n * phase.value()));
    }
    return state;
}

Complex inner_product(const SymmetricState &a, const SymmetricState &b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw DomainError("inner_product of symmetric states with different N");
    }
    Complex s = 0.0;
    for (std::size_t n = 0; n < a.amplitudes.size(); ++n) {
        s += std::conj(a.amplitudes[n]) * b.amplitudes[n];
    }
    return s;
}

ComplexMatrix dicke_embedding(int n_copies) {
    check_full_space(n_copies);
    const std::size_t dim = std::size_t{1} << n_copies;
    ComplexMatrix e(dim, static_cast<std::size_t>(n_copies) + 1);
    for (std::size_t x = 0; x < dim; ++x) {
        int w = std::popcount(x);
        e(x, static_cast<std::size_t>(w)) = 1.0 / std::sqrt(static_cast<double>(binom(n_copies, w)));
    }
    return e;
}

std::vector<Complex> embed(const SymmetricState &state) {
    check_full_space(state.n_copies);
    const std::size_t dim = std::size_t{1} << state.n_copies;
    std::vector<Complex> out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        int w = std::popcount(x);
        out[x] = state.amplitudes[static_cast<std::size_t>(w)] /
                 std::sqrt(static_cast<double>(binom(state.n_copies, w)));
    }
    return out;
}

}  // namespace eqfid
