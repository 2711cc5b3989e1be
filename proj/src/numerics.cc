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

#include "eqfid/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eqfid/errors.h"

namespace eqfid {

Phase::Phase(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative input can round back up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    value_ = r;
}

Phase Phase::from_degrees(double degrees) {
    return Phase(degrees * std::numbers::pi / 180.0);
}

Phase phase_difference(Phase to, Phase from) {
    return Phase(to.value() - from.value());
}

std::array<Complex, 2> EquatorialState::amplitudes() const {
    const double s = std::numbers::sqrt2 / 2;
    return {Complex(s, 0.0), std::polar(s, phase.value())};
}

EquatorialState equatorial_state(Phase phase) {
    return EquatorialState{phase};
}

QubitDensityMatrix QubitDensityMatrix::maximally_mixed() {
    return {0.5, 0.0, 0.0, 0.5};
}

QubitDensityMatrix QubitDensityMatrix::projector(const EquatorialState &state) {
    auto a = state.amplitudes();
    return {a[0] * std::conj(a[0]), a[0] * std::conj(a[1]), a[1] * std::conj(a[0]), a[1] * std::conj(a[1])};
}

double QubitDensityMatrix::hermiticity_error() const {
    double err = std::abs(entries_[1] - std::conj(entries_[2]));
    err = std::max(err, std::abs(entries_[0].imag()));
    err = std::max(err, std::abs(entries_[3].imag()));
    return err;
}

double QubitDensityMatrix::min_eigenvalue() const {
    double a = entries_[0].real();
    double d = entries_[3].real();
    Complex b = 0.5 * (entries_[1] + std::conj(entries_[2]));
    double half_gap = 0.5 * (a - d);
    return 0.5 * (a + d) - std::sqrt(half_gap * half_gap + std::norm(b));
}

bool QubitDensityMatrix::is_valid(double tol) const {
    return hermiticity_error() <= tol && std::abs(trace() - 1.0) <= tol && min_eigenvalue() >= -tol;
}

namespace {

void check_binom_args(int n, int i) {
    if (n < 0 || i < 0 || i > n) {
        throw DomainError("binomial index out of range: C(" + std::to_string(n) + ", " + std::to_string(i) + ")");
    }
}

}  // namespace

std::uint64_t binom(int n, int i) {
    check_binom_args(n, i);
    if (n > kExactBinomialCap) {
        throw ResourceError("exact binomial requested beyond uint64 range, n=" + std::to_string(n));
    }
    int k = std::min(i, n - i);
    unsigned __int128 c = 1;
    for (int j = 1; j <= k; ++j) {
        // c * (n - k + j) / j is exact at each step: it equals C(n - k + j, j).
        c = c * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<std::uint64_t> binomial_row(int n) {
    std::vector<std::uint64_t> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row.push_back(binom(n, i));
    }
    return row;
}

double log_binom(int n, int i) {
    check_binom_args(n, i);
    return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
}

double sqrt_binom_product(int n, int i) {
    if (i < 0 || i >= n) {
        throw DomainError("sqrt_binom_product index must satisfy 0 <= i < n");
    }
    if (n <= kExactBinomialCap) {
        return std::sqrt(static_cast<double>(binom(n, i))) * std::sqrt(static_cast<double>(binom(n, i + 1)));
    }
    return std::exp(0.5 * (log_binom(n, i) + log_binom(n, i + 1)));
}

double sqrt_binom_sum(int n) {
    if (n < 1) {
        throw DomainError("sqrt_binom_sum requires n >= 1");
    }
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        s += sqrt_binom_product(n, i);
    }
    return s;
}

double normalized_sqrt_binom_sum(int n) {
    if (n < 1) {
        throw DomainError("normalized_sqrt_binom_sum requires n >= 1");
    }
    if (n <= kExactBinomialCap) {
        return std::ldexp(sqrt_binom_sum(n), -n);
    }
    const double log_scale = n * std::numbers::ln2;
    double s = 0.0;
    double prev = log_binom(n, 0);
    for (int i = 0; i < n; ++i) {
        double next = log_binom(n, i + 1);
        s += std::exp(0.5 * (prev + next) - log_scale);
        prev = next;
    }
    return s;
}

double pure_fidelity(Phase phase_a, Phase phase_b) {
    double c = std::cos(0.5 * (phase_b.value() - phase_a.value()));
    return c * c;
}

QubitDensityMatrix clone_state(Phase phase, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("shrinking factor must lie in [0, 1]");
    }
    auto p = QubitDensityMatrix::projector(equatorial_state(phase));
    const double mix = 0.5 * (1.0 - eta);
    return {eta * p(0, 0) + mix, eta * p(0, 1), eta * p(1, 0), eta * p(1, 1) + mix};
}

double overlap(const QubitDensityMatrix &rho, Phase phase) {
    auto a = equatorial_state(phase).amplitudes();
    Complex v = std::conj(a[0]) * (rho(0, 0) * a[0] + rho(0, 1) * a[1]) +
                std::conj(a[1]) * (rho(1, 0) * a[0] + rho(1, 1) * a[1]);
    return v.real();
}

}  // namespace eqfid
