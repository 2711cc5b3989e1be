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

#include <string>

#include "eqfid/errors.h"
#include "eqfid/mixed.h"
#include "eqfid/symmetric.h"

namespace eqfid::serial {

namespace {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            for (std::size_t k = 0; k < b.rows; ++k) {
                for (std::size_t l = 0; l < b.cols; ++l) {
                    out(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace

ComplexMatrix symmetric_block(int n_copies, Phase delta, double eta_value) {
    if (n_copies > kDenseReferenceCap) {
        throw ResourceError("dense reference capped at N=" + std::to_string(kDenseReferenceCap));
    }
    const QubitDensityMatrix rho = clone_state(delta, eta_value);
    ComplexMatrix single(2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            single(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rho(r, c);
        }
    }
    ComplexMatrix full = single;
    for (int q = 1; q < n_copies; ++q) {
        full = kron(full, single);
    }

    const ComplexMatrix e = dicke_embedding(n_copies);
    const std::size_t dim = e.rows;
    const std::size_t cols = e.cols;
    ComplexMatrix block(cols, cols);
    for (std::size_t n = 0; n < cols; ++n) {
        for (std::size_t m = 0; m < cols; ++m) {
            Complex acc = 0.0;
            for (std::size_t x = 0; x < dim; ++x) {
                if (e(x, n) == 0.0) {
                    continue;
                }
                Complex row = 0.0;
                for (std::size_t y = 0; y < dim; ++y) {
                    row += full(x, y) * e(y, m);
                }
                acc += std::conj(e(x, n)) * row;
            }
            block(n, m) = acc;
        }
    }
    return block;
}

OutcomeDistribution mixed_ensemble_distribution(int n_copies, Phase delta, double eta_value) {
    return distribution_from_block(serial::symmetric_block(n_copies, delta, eta_value));
}

}  // namespace eqfid::serial
