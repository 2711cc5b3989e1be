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

#include <cmath>
#include <numbers>

#include "eqfid/errors.h"
#include "gtest/gtest.h"

using namespace eqfid;

namespace {

// Pascal's rule, independent of the multiplicative formula used by binom().
std::vector<std::vector<std::uint64_t>> pascal_triangle(int rows) {
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(rows) + 1);
    for (int n = 0; n <= rows; ++n) {
        auto &row = t[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int i = 1; i < n; ++i) {
            row[static_cast<std::size_t>(i)] =
                t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)] +
                t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
        }
    }
    return t;
}

}  // namespace

TEST(binom, small_rows) {
    EXPECT_EQ(binom(4, 2), 6u);
    EXPECT_EQ(binom(1, 0), 1u);
    EXPECT_EQ(binom(0, 0), 1u);
    EXPECT_EQ(binom(60, 30), 118264581564861424ULL);
}

TEST(binom, matches_pascal_recurrence_up_to_cap) {
    auto t = pascal_triangle(kExactBinomialCap);
    for (int n = 0; n <= kExactBinomialCap; ++n) {
        for (int i = 0; i <= n; ++i) {
            ASSERT_EQ(binom(n, i), t[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]) << n << "," << i;
        }
    }
}

TEST(binom, row_symmetry_and_sum) {
    for (int n = 0; n <= 60; ++n) {
        auto row = binomial_row(n);
        std::uint64_t sum = 0;
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(n - i)]);
            sum += row[static_cast<std::size_t>(i)];
        }
        EXPECT_EQ(sum, std::uint64_t{1} << n);
    }
}

TEST(binom, errors) {
    EXPECT_THROW(binom(3, 4), DomainError);
    EXPECT_THROW(binom(3, -1), DomainError);
    EXPECT_THROW(binom(-1, 0), DomainError);
    EXPECT_THROW(binom(kExactBinomialCap + 1, 2), ResourceError);
    EXPECT_NO_THROW(log_binom(kExactBinomialCap + 1, 2));
}

TEST(sqrt_binom_sum, examples) {
    EXPECT_NEAR(sqrt_binom_sum(1), 1.0, 1e-15);
    EXPECT_NEAR(sqrt_binom_sum(2), 2 * std::numbers::sqrt2, 1e-12 * 2.83);
    EXPECT_NEAR(sqrt_binom_sum(4), 4 + 4 * std::sqrt(6.0), 1e-12 * 13.8);
    EXPECT_THROW(sqrt_binom_sum(0), DomainError);
}

TEST(sqrt_binom_sum, log_space_path_matches_long_double_oracle) {
    // Past the exact cap the library switches to log-gamma; check both sides of
    // the switch against an extended-precision evaluation.
    for (int n : {40, 66, 67, 68, 69, 100, 500}) {
        long double s = 0;
        for (int i = 0; i < n; ++i) {
            long double lb = std::lgamma(n + 1.0L) - std::lgamma(i + 1.0L) - std::lgamma(n - i + 1.0L);
            long double lb1 = std::lgamma(n + 1.0L) - std::lgamma(i + 2.0L) - std::lgamma(n - i + 0.0L);
            s += std::exp(0.5L * (lb + lb1) - n * std::log(2.0L));
        }
        EXPECT_NEAR(normalized_sqrt_binom_sum(n), static_cast<double>(s), 1e-12) << n;
    }
}

TEST(Phase, normalization) {
    EXPECT_DOUBLE_EQ(Phase(kTwoPi).value(), 0.0);
    EXPECT_NEAR(Phase(-std::numbers::pi / 2).value(), 1.5 * std::numbers::pi, 1e-15);
    EXPECT_NEAR(Phase(5 * kTwoPi + 1.0).value(), 1.0, 1e-12);
    EXPECT_EQ(Phase(-1e-300).value(), 0.0);
    EXPECT_NEAR(Phase::from_degrees(90).value(), std::numbers::pi / 2, 1e-15);
    for (int j = -50; j <= 50; ++j) {
        Phase p(0.37 * j);
        EXPECT_GE(p.value(), 0.0);
        EXPECT_LT(p.value(), kTwoPi);
        EXPECT_EQ(Phase(p.value()), p);
    }
}

TEST(equatorial_state, amplitudes) {
    const double s = 1 / std::numbers::sqrt2;
    auto a = equatorial_state(Phase(0)).amplitudes();
    EXPECT_NEAR(std::abs(a[0] - Complex(s, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(a[1] - Complex(s, 0)), 0, 1e-15);
    a = equatorial_state(Phase(std::numbers::pi)).amplitudes();
    EXPECT_NEAR(std::abs(a[1] - Complex(-s, 0)), 0, 1e-15);
    a = equatorial_state(Phase(std::numbers::pi / 2)).amplitudes();
    EXPECT_NEAR(std::abs(a[1] - Complex(0, s)), 0, 1e-15);
    for (int j = 0; j < 100; ++j) {
        a = equatorial_state(Phase(0.1 * j)).amplitudes();
        EXPECT_NEAR(std::norm(a[0]) + std::norm(a[1]), 1.0, 1e-14);
    }
}

TEST(pure_fidelity, examples_and_symmetry) {
    EXPECT_NEAR(pure_fidelity(Phase(1.3), Phase(1.3)), 1.0, 1e-15);
    EXPECT_NEAR(pure_fidelity(Phase(0), Phase(std::numbers::pi)), 0.0, 1e-15);
    EXPECT_NEAR(pure_fidelity(Phase(0), Phase(std::numbers::pi / 2)), 0.5, 1e-15);
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            double a = 0.31 * i;
            double b = 0.47 * j;
            double f = pure_fidelity(Phase(a), Phase(b));
            EXPECT_NEAR(f, pure_fidelity(Phase(b), Phase(a)), 1e-15);
            EXPECT_NEAR(f, pure_fidelity(Phase(a + kTwoPi), Phase(b)), 1e-12);
            EXPECT_NEAR(f, pure_fidelity(Phase(a), Phase(b + kTwoPi)), 1e-12);
            // |<psi_a|psi_b>|^2 from amplitudes
            auto va = equatorial_state(Phase(a)).amplitudes();
            auto vb = equatorial_state(Phase(b)).amplitudes();
            EXPECT_NEAR(f, std::norm(std::conj(va[0]) * vb[0] + std::conj(va[1]) * vb[1]), 1e-14);
        }
    }
}

TEST(clone_state, limits) {
    Phase phi(0.8);
    auto pure = clone_state(phi, 1.0);
    auto proj = QubitDensityMatrix::projector(equatorial_state(phi));
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            EXPECT_NEAR(std::abs(pure(r, c) - proj(r, c)), 0, 1e-15);
        }
    }
    auto mixed = clone_state(phi, 0.0);
    EXPECT_NEAR(std::abs(mixed(0, 0) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(mixed(0, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(mixed(1, 1) - 0.5), 0, 1e-15);
    EXPECT_NEAR(overlap(clone_state(phi, 1 / std::numbers::sqrt2), phi), (1 + 1 / std::numbers::sqrt2) / 2, 1e-12);
    EXPECT_THROW(clone_state(phi, -0.01), DomainError);
    EXPECT_THROW(clone_state(phi, 1.01), DomainError);
    EXPECT_THROW(clone_state(phi, std::nan("")), DomainError);
}

TEST(clone_state, grid_validity_and_overlap_identity) {
    for (int i = 0; i < 100; ++i) {
        Phase phi(kTwoPi * i / 100);
        for (int j = 0; j < 100; ++j) {
            double eta = j / 99.0;
            auto rho = clone_state(phi, eta);
            ASSERT_TRUE(rho.is_valid()) << i << "," << j;
            ASSERT_NEAR(overlap(rho, phi), (1 + eta) / 2, 1e-12);
        }
    }
}

TEST(overlap, examples) {
    EXPECT_NEAR(overlap(QubitDensityMatrix::maximally_mixed(), Phase(2.2)), 0.5, 1e-15);
    Phase phi(4.0);
    EXPECT_NEAR(overlap(QubitDensityMatrix::projector(equatorial_state(phi)), phi), 1.0, 1e-15);
}

TEST(QubitDensityMatrix, rejects_invalid) {
    EXPECT_FALSE(QubitDensityMatrix(0.6, 0, 0, 0.6).is_valid());
    EXPECT_FALSE(QubitDensityMatrix(1.5, 0, 0, -0.5).is_valid());
    EXPECT_FALSE(QubitDensityMatrix(0.5, Complex(0, 0.1), Complex(0, 0.1), 0.5).is_valid());
    EXPECT_TRUE(QubitDensityMatrix::maximally_mixed().is_valid());
}
