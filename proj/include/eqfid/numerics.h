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

#ifndef EQFID_NUMERICS_H
#define EQFID_NUMERICS_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace eqfid {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest N for which every C(N, i) fits in a uint64_t.
inline constexpr int kExactBinomialCap = 67;

/// Angle on the equator of the Bloch sphere, kept in [0, 2pi).
class Phase {
   public:
    constexpr Phase() = default;
    explicit Phase(double radians);

    static Phase from_degrees(double degrees);

    double value() const {
        return value_;
    }

    friend bool operator==(const Phase &, const Phase &) = default;

   private:
    double value_ = 0.0;
};

/// Phase of `to` relative to `from`, i.e. (to - from) mod 2pi.
Phase phase_difference(Phase to, Phase from);

/// (|0> + e^{i phi}|1>) / sqrt(2).
struct EquatorialState {
    Phase phase;

    std::array<Complex, 2> amplitudes() const;
};

EquatorialState equatorial_state(Phase phase);

/// 2x2 complex matrix stored row-major. Only the factory functions below are
/// guaranteed to produce a valid density matrix; `is_valid` checks the rest.
class QubitDensityMatrix {
   public:
    QubitDensityMatrix() = default;
    QubitDensityMatrix(Complex e00, Complex e01, Complex e10, Complex e11) : entries_{e00, e01, e10, e11} {
    }

    static QubitDensityMatrix maximally_mixed();
    static QubitDensityMatrix projector(const EquatorialState &state);

    Complex operator()(int row, int col) const {
        return entries_[2 * row + col];
    }

    Complex trace() const {
        return entries_[0] + entries_[3];
    }
    double hermiticity_error() const;
    /// Smaller eigenvalue of the Hermitian part.
    double min_eigenvalue() const;
    bool is_valid(double tol = 1e-12) const;

   private:
    std::array<Complex, 4> entries_{};
};

/// Small dense row-major complex matrix used for embeddings and reduced blocks.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data[r * cols + c];
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }
};

/// Exact C(n, i). Throws DomainError unless 0 <= i <= n, ResourceError when
/// n exceeds kExactBinomialCap.
std::uint64_t binom(int n, int i);

/// Full Pascal row C(n, 0) .. C(n, n), exact.
std::vector<std::uint64_t> binomial_row(int n);

/// ln C(n, i) via log-gamma; valid for any n.
double log_binom(int n, int i);

/// sqrt(C(n, i) * C(n, i + 1)) for 0 <= i < n. Exact integer inputs up to the
/// cap, log-gamma beyond it.
double sqrt_binom_product(int n, int i);

/// S_n = sum_{i=0}^{n-1} sqrt(C(n, i) C(n, i+1)). Overflows to inf for very
/// large n; use normalized_sqrt_binom_sum there.
double sqrt_binom_sum(int n);

/// S_n / 2^n, evaluated in log space past the exact cap so it stays finite
/// for any n. Tends to 1 as n grows.
double normalized_sqrt_binom_sum(int n);

/// |<psi(a)|psi(b)>|^2 = cos^2((b - a) / 2).
double pure_fidelity(Phase phase_a, Phase phase_b);

/// eta |psi(phi)><psi(phi)| + (1 - eta) I / 2.
QubitDensityMatrix clone_state(Phase phase, double eta);

/// <psi(phi)| rho |psi(phi)>.
double overlap(const QubitDensityMatrix &rho, Phase phase);

}  // namespace eqfid

#endif
