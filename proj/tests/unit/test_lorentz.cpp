// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/lorentz.hpp"
#include "dirac/algebra.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace dirac;

TEST_CASE("generators") {
    CHECK(generator(0, 0) == ComplexMatrix4::zero());
    const auto direct = Complex(0.25) * commutator(gamma(1), gamma(2));
    CHECK(max_abs_diff(generator(1, 2), direct) <= 1e-15);
    CHECK(max_abs_diff(generator(1, 2), Complex(0.5) * gamma(1) * gamma(2)) <= 1e-15);
    CHECK(generator(0, 1) == -generator(1, 0));
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            const auto expected = Complex(0.5) * gamma(r) * gamma(s) - Complex(0.5 * metric(r, s)) * ComplexMatrix4::identity();
            CHECK(max_abs_diff(generator(r, s), expected) <= 1e-15);
        }
    CHECK_THROWS_AS((void)generator(4, 0), std::out_of_range);
}

TEST_CASE("parameter validation") {
    std::array<std::array<double, 4>, 4> w{};
    w[0][1] = 0.3;
    CHECK_THROWS_AS(LorentzParams{w}, std::invalid_argument);
    w[1][0] = -0.3;
    CHECK_NOTHROW(LorentzParams{w});
    w[2][3] = 11.0;
    w[3][2] = -11.0;
    CHECK_THROWS_AS(LorentzParams{w}, std::invalid_argument);

    const auto p = LorentzParams::from_components({0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
    CHECK(p(0, 1) == 0.1);
    CHECK(p(1, 0) == -0.1);
    CHECK(p(2, 3) == 0.6);
    CHECK(p.components() == std::array<double, 6>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
}

TEST_CASE("spinor representation") {
    CHECK(max_abs_diff(spinor_rep(LorentzParams{}), ComplexMatrix4::identity()) <= 1e-15);
    const auto c = conjugation_C();
    const auto cg5 = conjugation_C_gamma5();
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto p = random_lorentz(seed, 0.5);
        const auto s = spinor_rep(p);
        const test::EMat s_inv = test::to_eigen(s).inverse();
        CHECK(test::max_abs_diff(s.transpose() * c, test::to_eigen(c) * s_inv) <= 1e-10);
        CHECK(max_abs_diff(s.transpose() * c * s, c) <= 1e-10);
        CHECK(max_abs_diff(s.transpose() * cg5 * s, cg5) <= 1e-10);
        CHECK(max_abs_diff(commutator(s, gamma5()), ComplexMatrix4::zero()) <= 1e-12);
        CHECK(test::max_abs_diff(spinor_rep_inverse(p), s_inv) <= 1e-10);
        CHECK(std::abs(determinant(s) - 1.0) <= 1e-12);
    }
}

TEST_CASE("vector representation") {
    const auto id = vector_rep(LorentzParams{});
    CHECK(max_abs_diff(id, RealMatrix4::identity()) <= 1e-14);
    const auto g = minkowski_metric();
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        const auto p = random_lorentz(seed, 0.5);
        const auto lam = vector_rep(p);
        const auto s = spinor_rep(p);
        const auto s_inv = spinor_rep_inverse(p);
        CHECK(max_abs_diff(lam.transpose() * g * lam, g) <= 1e-10);
        CHECK(std::abs(lam.determinant() - 1.0) <= 1e-10);
        CHECK(lam(0, 0) >= 1.0 - 1e-12);
        for (int mu = 0; mu < 4; ++mu) {
            ComplexMatrix4 rhs;
            for (int nu = 0; nu < 4; ++nu) rhs += Complex(lam(mu, nu)) * gamma(nu);
            CHECK(max_abs_diff(s_inv * gamma(mu) * s, rhs) <= 1e-10);
        }
    }
}

TEST_CASE("rotation about the z axis") {
    // omega_{12} = theta rotates the (1,2) plane; the spinor picks up half angles
    const double theta = 0.7;
    const auto p = LorentzParams::from_components({0, 0, 0, theta, 0, 0});
    const auto lam = vector_rep(p);
    CHECK(lam(3, 3) == doctest::Approx(1.0));
    CHECK(lam(0, 0) == doctest::Approx(1.0));
    CHECK(std::abs(lam(1, 1)) == doctest::Approx(std::cos(theta)));
    CHECK(std::abs(lam(1, 2)) == doctest::Approx(std::sin(theta)));
    const auto s = spinor_rep(p);
    CHECK(std::abs(s(0, 0)) == doctest::Approx(1.0));
    CHECK(std::arg(s(0, 0)) == doctest::Approx(std::copysign(theta / 2, std::arg(s(0, 0)))));
}

TEST_CASE("discrete transforms") {
    const auto phi = [](std::size_t j) { return ComplexVector4::basis(j); };
    CHECK(approx_equal(discrete_apply(DiscreteTransform::P, phi(2)), Complex(-1.0) * phi(2), 1e-15));
    for (std::size_t j = 0; j < 4; ++j) {
        const auto tt = discrete_apply(DiscreteTransform::T, discrete_apply(DiscreteTransform::T, phi(j)));
        CHECK(approx_equal(tt, Complex(-1.0) * phi(j), 1e-15));
    }
    CHECK(approx_equal(discrete_apply(DiscreteTransform::CPT, phi(0)), Complex(0, -1) * phi(2), 1e-15));

    const ComplexVector4 psi{{Complex{0.3, 0.1}, Complex{-0.2, 0.7}, Complex{0.5, -0.4}, Complex{0.0, 1.0}}};
    CHECK(approx_equal(discrete_apply(DiscreteTransform::T, psi), conjugation_C() * psi.conj(), 1e-15));
    CHECK(approx_equal(discrete_apply(DiscreteTransform::Ccharge, psi), kI * gamma(2) * psi.conj(), 1e-15));
    CHECK(approx_equal(discrete_apply(DiscreteTransform::CP, psi), Complex(0, -1) * conjugation_C_gamma5() * psi.conj(), 1e-15));
    CHECK(approx_equal(discrete_apply(DiscreteTransform::CPT, psi), Complex(0, -1) * gamma5() * psi, 1e-15));

    CHECK_FALSE(is_antiunitary(DiscreteTransform::P));
    CHECK_FALSE(is_antiunitary(DiscreteTransform::CPT));
    CHECK(is_antiunitary(DiscreteTransform::T));
    CHECK(is_antiunitary(DiscreteTransform::Ccharge));
    CHECK(is_antiunitary(DiscreteTransform::CP));
    CHECK(linear_matrix(DiscreteTransform::P).value() == gamma(0));
    CHECK_FALSE(linear_matrix(DiscreteTransform::T).has_value());
}

TEST_CASE("kernel behaviour under P and CPT") {
    const auto c = conjugation_C();
    const auto cg5 = conjugation_C_gamma5();
    const auto g0 = gamma(0);
    CHECK(max_abs_diff(g0.transpose() * c * g0, c) <= 1e-15);
    CHECK(max_abs_diff(g0.transpose() * cg5 * g0, -cg5) <= 1e-15);
    const auto cpt = Complex(0, -1) * gamma5();
    CHECK(max_abs_diff(cpt.transpose() * c * cpt, -c) <= 1e-15);
    CHECK(max_abs_diff(cpt.transpose() * cg5 * cpt, -cg5) <= 1e-15);
}

TEST_CASE("random_lorentz") {
    CHECK(random_lorentz(3) == random_lorentz(3));
    CHECK_FALSE(random_lorentz(3) == random_lorentz(4));
    const auto p = random_lorentz(1, 0.5);
    for (double w : p.components()) CHECK(std::abs(w) <= 0.5);
    CHECK_THROWS_AS((void)random_lorentz(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)random_lorentz(1, 2.5), std::invalid_argument);
}
