// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/algebra.hpp"
#include "dirac/harness/random.hpp"
#include "support.hpp"

#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace dirac;

namespace {
const ComplexMatrix4 I4 = ComplexMatrix4::identity();
}

TEST_CASE("gamma matrices in the Dirac basis") {
    CHECK(gamma(0) == ComplexMatrix4::diagonal(1, 1, -1, -1));
    CHECK(gamma(1) * gamma(1) == -I4);
    CHECK(anticommutator(gamma(1), gamma(2)) == ComplexMatrix4::zero());
    CHECK_THROWS_AS((void)gamma(4), std::out_of_range);
    CHECK_THROWS_AS((void)gamma(-1), std::out_of_range);

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            CAPTURE(mu);
            CAPTURE(nu);
            CHECK(max_abs_diff(anticommutator(gamma(mu), gamma(nu)), Complex(2.0 * metric(mu, nu)) * I4) <= 1e-15);
        }
}

TEST_CASE("gamma5") {
    const auto g5 = gamma5();
    const auto expected = ComplexMatrix4::from_blocks({0, 0, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 0});
    CHECK(g5 == expected);
    CHECK(g5 * g5 == I4);
    CHECK(max_abs_diff(g5, kI * gamma(0) * gamma(1) * gamma(2) * gamma(3)) <= 1e-15);
    for (int mu = 0; mu < 4; ++mu) CHECK(anticommutator(g5, gamma(mu)) == ComplexMatrix4::zero());
    CHECK(g5.adjoint() == g5);
}

TEST_CASE("charge conjugation matrix") {
    const auto c = conjugation_C();
    const auto s2 = pauli(2);
    const auto expected = ComplexMatrix4::from_blocks({-s2.e[0], -s2.e[1], -s2.e[2], -s2.e[3]}, {0, 0, 0, 0},
                                                      {0, 0, 0, 0}, {-s2.e[0], -s2.e[1], -s2.e[2], -s2.e[3]});
    CHECK(c == expected);
    CHECK(c * c == I4);
    CHECK(c.adjoint() == c);
    CHECK(c.transpose() == -c);
    CHECK(max_abs_diff(c, kI * gamma(1) * gamma(3)) <= 1e-15);
    for (int mu = 0; mu < 4; ++mu) CHECK(max_abs_diff(gamma(mu).transpose(), c * gamma(mu) * c) <= 1e-15);

    const auto cg5 = conjugation_C_gamma5();
    CHECK(cg5.transpose() == -cg5);
    CHECK(cg5 == c * gamma5());
}

TEST_CASE("chiral projectors") {
    const auto pl = chiral_projector(Hand::Left);
    const auto pr = chiral_projector(Hand::Right);
    CHECK(pl + pr == I4);
    CHECK(max_abs_diff(pl * pl, pl) <= 1e-15);
    CHECK(max_abs_diff(pr * pr, pr) <= 1e-15);
    CHECK(max_abs_diff(pl * pr, ComplexMatrix4::zero()) <= 1e-15);

    const Complex a{0.3, -1.2}, b{2.0, 0.5};
    const ComplexVector4 v{{a, b, a, b}};
    CHECK(approx_equal(pr * v, v, 1e-15));
    CHECK(approx_equal(pl * v, ComplexVector4{}, 1e-15));
}

TEST_CASE("gamma products") {
    CHECK(gamma_product({}) == I4);
    const int idx[] = {0, 2, 3};
    CHECK(gamma_product(idx) == gamma(0) * gamma(2) * gamma(3));
}

TEST_CASE("mat_exp special cases") {
    CHECK(max_abs_diff(mat_exp(ComplexMatrix4::zero()), I4) <= 1e-15);
    CHECK(max_abs_diff(mat_exp(Complex(0, std::numbers::pi) * gamma(0)), -I4) <= 1e-13);

    const Complex a{0.5, 1.0}, b{-2.0, 0.0}, c{0.0, 3.0}, d{1.5, -0.25};
    const auto e = mat_exp(ComplexMatrix4::diagonal(a, b, c, d));
    CHECK(max_abs_diff(e, ComplexMatrix4::diagonal(std::exp(a), std::exp(b), std::exp(c), std::exp(d))) <= 1e-13);
}

TEST_CASE("mat_exp against Eigen's matrix exponential") {
    auto rng = harness::make_rng(99, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        auto m = harness::random_matrix(rng);
        const double target = 0.1 + 9.9 * (trial % 100) / 99.0;
        m *= Complex(target / operator_norm(m));
        const test::EMat ref = test::to_eigen(m).exp();
        const double rel = (test::to_eigen(mat_exp(m)) - ref).norm() / ref.norm();
        worst = std::max(worst, rel);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("mat_exp inverse identity and input checks") {
    auto rng = harness::make_rng(5, 1);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = harness::random_matrix(rng);
        m *= Complex(5.0 / operator_norm(m));
        CHECK(max_abs_diff(mat_exp(m) * mat_exp(-m), I4) <= 1e-12);
    }
    CHECK_THROWS_AS((void)mat_exp(Complex(60.0) * I4), std::domain_error);
    auto bad = I4;
    bad(1, 2) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS((void)mat_exp(bad), std::domain_error);
}

TEST_CASE("operator norm, determinant and inverse against Eigen") {
    auto rng = harness::make_rng(21, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = harness::random_matrix(rng, 2.0);
        const test::EMat em = test::to_eigen(m);
        Eigen::JacobiSVD<test::EMat> svd(em);
        CHECK(operator_norm(m) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
        CHECK(std::abs(determinant(m) - em.determinant()) <= 1e-12 * std::max(1.0, std::abs(em.determinant())));
        CHECK(test::max_abs_diff(inverse(m), em.inverse()) <= 1e-10 * std::max(1.0, em.inverse().cwiseAbs().maxCoeff()));
    }
    CHECK_THROWS_AS((void)inverse(ComplexMatrix4::zero()), std::domain_error);
}

TEST_CASE("hermiticity check") {
    CHECK(is_hermitian(gamma(0)));
    CHECK_FALSE(is_hermitian(gamma(1)));
    CHECK(is_hermitian(gamma(0) * gamma(1)));
    CHECK_FALSE(is_hermitian(kI * gamma(0) * gamma(1)));
    CHECK(is_hermitian(conjugation_C()));
}
