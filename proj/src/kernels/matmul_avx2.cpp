// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 -mfma.  Only reached through the dispatcher after a
// cpuid check, so nothing here may run at static-initialization time.

#include "dirac/kernels.hpp"

#include <immintrin.h>

namespace dirac::kernels::avx2 {

namespace {

// One output row: sum_k a[k] * brow[k], with each b row held as two registers
// [b0.re b0.im b1.re b1.im] [b2.re b2.im b3.re b3.im].
inline void row_times(const double* arow, const __m256d (&blo)[4], const __m256d (&bhi)[4],
                      double* orow) noexcept {
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    for (int k = 0; k < 4; ++k) {
        const __m256d are = _mm256_broadcast_sd(arow + 2 * k);
        const __m256d aim = _mm256_broadcast_sd(arow + 2 * k + 1);
        // swap re/im within each complex lane
        const __m256d slo = _mm256_permute_pd(blo[k], 0b0101);
        const __m256d shi = _mm256_permute_pd(bhi[k], 0b0101);
        // (are*b) -/+ (aim*swapped b): even lanes subtract, odd lanes add
        acc_lo = _mm256_add_pd(acc_lo, _mm256_fmaddsub_pd(are, blo[k], _mm256_mul_pd(aim, slo)));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_fmaddsub_pd(are, bhi[k], _mm256_mul_pd(aim, shi)));
    }
    _mm256_storeu_pd(orow, acc_lo);
    _mm256_storeu_pd(orow + 4, acc_hi);
}

}  // namespace

void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept {
    const auto* ad = reinterpret_cast<const double*>(a);
    const auto* bd = reinterpret_cast<const double*>(b);
    auto* od = reinterpret_cast<double*>(out);
    __m256d blo[4];
    __m256d bhi[4];
    for (int k = 0; k < 4; ++k) {
        blo[k] = _mm256_loadu_pd(bd + 8 * k);
        bhi[k] = _mm256_loadu_pd(bd + 8 * k + 4);
    }
    for (int i = 0; i < 4; ++i) {
        row_times(ad + 8 * i, blo, bhi, od + 8 * i);
    }
}

void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept {
    for (std::size_t n = 0; n < count; ++n) {
        matmul4(a + 16 * n, b + 16 * n, out + 16 * n);
    }
}

}  // namespace dirac::kernels::avx2
