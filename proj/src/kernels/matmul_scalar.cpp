// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/kernels.hpp"

namespace dirac::kernels::scalar {

void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (int k = 0; k < 4; ++k) {
                const std::complex<double> x = a[4 * i + k];
                const std::complex<double> y = b[4 * k + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            out[4 * i + j] = {re, im};
        }
    }
}

void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept {
    for (std::size_t n = 0; n < count; ++n) {
        matmul4(a + 16 * n, b + 16 * n, out + 16 * n);
    }
}

}  // namespace dirac::kernels::scalar
