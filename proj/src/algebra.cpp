// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

// Block [[0, s], [-s, 0]] for a 2x2 block s.
ComplexMatrix4 off_diagonal_pair(const ComplexMatrix2& s) {
    const std::array<Complex, 4> zero{};
    const std::array<Complex, 4> neg{-s.e[0], -s.e[1], -s.e[2], -s.e[3]};
    return ComplexMatrix4::from_blocks(zero, s.e, neg, zero);
}

constexpr int kTaylorOrder = 14;
// Scale until ||M|| / 2^s <= this; the order-14 remainder is then < 1e-22.
constexpr double kScaledNormTarget = 0.25;

}  // namespace

double metric(int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("metric index must be in 0..3");
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

ComplexMatrix2 pauli(int k) {
    switch (k) {
        case 0: return ComplexMatrix2::identity();
        case 1: return {{0.0, 1.0, 1.0, 0.0}};
        case 2: return {{0.0, -kI, kI, 0.0}};
        case 3: return {{1.0, 0.0, 0.0, -1.0}};
        default: throw std::out_of_range("Pauli index must be in 0..3, got " + std::to_string(k));
    }
}

ComplexMatrix4 gamma(int mu) {
    switch (mu) {
        case 0: return ComplexMatrix4::diagonal(1.0, 1.0, -1.0, -1.0);
        case 1:
        case 2:
        case 3: return off_diagonal_pair(pauli(mu));
        default: throw std::out_of_range("gamma index must be in 0..3, got " + std::to_string(mu));
    }
}

ComplexMatrix4 gamma5() {
    const std::array<Complex, 4> zero{};
    const std::array<Complex, 4> one{1.0, 0.0, 0.0, 1.0};
    return ComplexMatrix4::from_blocks(zero, one, one, zero);
}

ComplexMatrix4 conjugation_C() {
    const ComplexMatrix2 s = -1.0 * pauli(2);
    const std::array<Complex, 4> zero{};
    return ComplexMatrix4::from_blocks(s.e, zero, zero, s.e);
}

ComplexMatrix4 conjugation_C_gamma5() { return conjugation_C() * gamma5(); }

ComplexMatrix4 chiral_projector(Hand hand) {
    const double sign = hand == Hand::Right ? 1.0 : -1.0;
    return 0.5 * (ComplexMatrix4::identity() + sign * gamma5());
}

ComplexMatrix4 gamma_product(std::span<const int> indices) {
    ComplexMatrix4 p = ComplexMatrix4::identity();
    for (int mu : indices) p = p * gamma(mu);
    return p;
}

double operator_norm(const ComplexMatrix4& a) {
    Eigen::Matrix4cd m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = a(r, c);
    const Eigen::Matrix4cd gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

ComplexMatrix4 mat_exp(const ComplexMatrix4& m) {
    if (!m.is_finite()) throw std::domain_error("mat_exp: non-finite entries");
    const double norm = operator_norm(m);
    if (norm > kMatExpNormBound) {
        throw std::domain_error("mat_exp: operator norm " + std::to_string(norm) + " exceeds bound " +
                                std::to_string(kMatExpNormBound));
    }

    int squarings = 0;
    if (norm > kScaledNormTarget) squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormTarget)));
    const ComplexMatrix4 a = std::ldexp(1.0, -squarings) * m;

    // Horner form of sum_{k<=N} a^k / k!
    ComplexMatrix4 result = ComplexMatrix4::identity();
    for (int k = kTaylorOrder; k >= 1; --k) {
        result = ComplexMatrix4::identity() + (1.0 / k) * (a * result);
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

bool is_hermitian(const ComplexMatrix4& a, double tol) {
    return max_abs_diff(a, a.adjoint()) <= tol * std::max(1.0, a.max_abs());
}

}  // namespace dirac
