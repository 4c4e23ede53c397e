// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Inner-loop kernels for 4x4 complex arithmetic.
//
// Every kernel has a scalar reference implementation.  On x86-64 an AVX2+FMA
// variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it.  Setting DIRAC_SIMD=scalar in the
// environment forces the reference path.  The selection is made once, on
// first use, and never changes afterwards.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace dirac::kernels {

enum class Backend { Scalar, Avx2 };

/// out = a * b for row-major 4x4 complex matrices.  out may not alias a or b.
using Matmul4Fn = void (*)(const std::complex<double>* a, const std::complex<double>* b,
                           std::complex<double>* out) noexcept;

/// Batched 4x4 products: out[i] = a[i] * b[i] for i < count.
using BatchMatmul4Fn = void (*)(const std::complex<double>* a, const std::complex<double>* b,
                                std::complex<double>* out, std::size_t count) noexcept;

namespace scalar {
void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept;
void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept;
}  // namespace scalar

#if defined(DIRAC_HAVE_AVX2_KERNELS)
namespace avx2 {
void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept;
void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept;
}  // namespace avx2
#endif

/// True when the variant was compiled in and the running CPU can execute it.
[[nodiscard]] bool backend_available(Backend b) noexcept;

/// Backend chosen for the dispatching entry points below.
[[nodiscard]] Backend active_backend() noexcept;

[[nodiscard]] std::string_view backend_name(Backend b) noexcept;

[[nodiscard]] Matmul4Fn matmul4_for(Backend b) noexcept;
[[nodiscard]] BatchMatmul4Fn batch_matmul4_for(Backend b) noexcept;

void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept;
void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept;

}  // namespace dirac::kernels
