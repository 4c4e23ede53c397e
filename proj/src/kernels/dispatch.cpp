// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace dirac::kernels {

namespace {

bool cpu_has_avx2_fma() noexcept {
#if defined(DIRAC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend select_backend() noexcept {
    if (const char* env = std::getenv("DIRAC_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return Backend::Scalar;
    }
    return cpu_has_avx2_fma() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

bool backend_available(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return cpu_has_avx2_fma();
    }
    return false;
}

Backend active_backend() noexcept {
    static const Backend chosen = select_backend();
    return chosen;
}

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

Matmul4Fn matmul4_for(Backend b) noexcept {
#if defined(DIRAC_HAVE_AVX2_KERNELS)
    if (b == Backend::Avx2 && backend_available(b)) return &avx2::matmul4;
#endif
    (void)b;
    return &scalar::matmul4;
}

BatchMatmul4Fn batch_matmul4_for(Backend b) noexcept {
#if defined(DIRAC_HAVE_AVX2_KERNELS)
    if (b == Backend::Avx2 && backend_available(b)) return &avx2::batch_matmul4;
#endif
    (void)b;
    return &scalar::batch_matmul4;
}

void matmul4(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* out) noexcept {
    static const Matmul4Fn fn = matmul4_for(active_backend());
    fn(a, b, out);
}

void batch_matmul4(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* out, std::size_t count) noexcept {
    static const BatchMatmul4Fn fn = batch_matmul4_for(active_backend());
    fn(a, b, out, count);
}

}  // namespace dirac::kernels
