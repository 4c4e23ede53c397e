// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/kernels.hpp"
#include "dirac/harness/random.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cstdlib>
#include <string_view>
#include <vector>

using namespace dirac;
using kernels::Backend;

namespace {

double max_diff(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::Scalar};
    if (kernels::backend_available(Backend::Avx2)) out.push_back(Backend::Avx2);
    return out;
}

}  // namespace

TEST_CASE("scalar matmul4 matches Eigen") {
    auto rng = harness::make_rng(7, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = harness::random_matrix(rng, 3.0);
        const auto b = harness::random_matrix(rng, 3.0);
        ComplexMatrix4 out;
        kernels::scalar::matmul4(a.data(), b.data(), out.data());
        CHECK(test::max_abs_diff(out, test::to_eigen(a) * test::to_eigen(b)) < 1e-13);
    }
}

TEST_CASE("every available backend agrees with the scalar kernel") {
    auto rng = harness::make_rng(11, 0);
    for (Backend b : available_backends()) {
        CAPTURE(kernels::backend_name(b));
        const auto fn = kernels::matmul4_for(b);
        double worst = 0.0;
        for (int trial = 0; trial < 500; ++trial) {
            const auto x = harness::random_matrix(rng, 5.0);
            const auto y = harness::random_matrix(rng, 5.0);
            ComplexMatrix4 ref, got;
            kernels::scalar::matmul4(x.data(), y.data(), ref.data());
            fn(x.data(), y.data(), got.data());
            worst = std::max(worst, max_diff(ref.data(), got.data(), 16) / std::max(1.0, ref.max_abs()));
        }
        // FMA contraction changes rounding only.
        CHECK(worst < 1e-14);
    }
}

TEST_CASE("batched kernels match repeated single products") {
    auto rng = harness::make_rng(13, 0);
    constexpr std::size_t n = 37;
    std::vector<ComplexMatrix4> a(n), b(n), single(n), batch(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = harness::random_matrix(rng);
        b[i] = harness::random_matrix(rng);
        kernels::scalar::matmul4(a[i].data(), b[i].data(), single[i].data());
    }
    for (Backend be : available_backends()) {
        CAPTURE(kernels::backend_name(be));
        kernels::batch_matmul4_for(be)(a[0].data(), b[0].data(), batch[0].data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(max_diff(single[i].data(), batch[i].data(), 16) < 1e-14);
    }
    // count = 0 touches nothing
    ComplexMatrix4 untouched = ComplexMatrix4::identity();
    kernels::batch_matmul4(a[0].data(), b[0].data(), untouched.data(), 0);
    CHECK(untouched == ComplexMatrix4::identity());
}

TEST_CASE("dispatching entry point follows the active backend") {
    const Backend active = kernels::active_backend();
    CHECK(kernels::backend_available(active));
    CHECK(kernels::backend_available(Backend::Scalar));
    if (const char* expect = std::getenv("DIRAC_EXPECT_BACKEND")) {
        CHECK(kernels::backend_name(active) == std::string_view(expect));
    }
    if (const char* env = std::getenv("DIRAC_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        CHECK(active == Backend::Scalar);
    }

    auto rng = harness::make_rng(17, 0);
    const auto x = harness::random_matrix(rng);
    const auto y = harness::random_matrix(rng);
    ComplexMatrix4 via_dispatch, via_backend;
    kernels::matmul4(x.data(), y.data(), via_dispatch.data());
    kernels::matmul4_for(active)(x.data(), y.data(), via_backend.data());
    CHECK(via_dispatch == via_backend);
    // operator* goes through the same dispatcher
    CHECK((x * y) == via_backend);
}

TEST_CASE("backend names") {
    CHECK(kernels::backend_name(Backend::Scalar) == "scalar");
    CHECK(kernels::backend_name(Backend::Avx2) == "avx2");
    // requesting an unavailable backend falls back to the reference kernel
    if (!kernels::backend_available(Backend::Avx2)) {
        CHECK(kernels::matmul4_for(Backend::Avx2) == &kernels::scalar::matmul4);
    }
}
