// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Gamma-matrix algebra in the Dirac basis and the matrix exponential.
//
// Signature (+,-,-,-).  The basis is fixed: gamma^0 = diag(I, -I) and
// gamma^k = [[0, sigma^k], [-sigma^k, 0]].  The coefficient expansions of the
// invariants are basis dependent, so no other representation is offered.

#pragma once

#include "dirac/types.hpp"

#include <span>

namespace dirac {

enum class Hand { Left, Right };

/// Minkowski metric g^{mu nu} = diag(1, -1, -1, -1).
[[nodiscard]] double metric(int mu, int nu);

/// Pauli matrix sigma^k for k in 1..3; k = 0 gives the 2x2 identity.
[[nodiscard]] ComplexMatrix2 pauli(int k);

/// gamma^mu, mu in 0..3.  Throws std::out_of_range otherwise.
[[nodiscard]] ComplexMatrix4 gamma(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = [[0, I], [I, 0]].
[[nodiscard]] ComplexMatrix4 gamma5();

/// C = i gamma^1 gamma^3 = diag(-sigma^2, -sigma^2).  C = C^dagger = C^{-1}, C^T = -C.
[[nodiscard]] ComplexMatrix4 conjugation_C();

/// C gamma^5, the second antisymmetric kernel.
[[nodiscard]] ComplexMatrix4 conjugation_C_gamma5();

/// P_L = (1 - gamma^5)/2, P_R = (1 + gamma^5)/2.
[[nodiscard]] ComplexMatrix4 chiral_projector(Hand hand);

/// Ordered product gamma^{i0} gamma^{i1} ...; empty product is the identity.
[[nodiscard]] ComplexMatrix4 gamma_product(std::span<const int> indices);

/// Spectral norm, from the largest eigenvalue of A^dagger A.
[[nodiscard]] double operator_norm(const ComplexMatrix4& a);

/// Largest operator norm accepted by mat_exp.
inline constexpr double kMatExpNormBound = 50.0;

/// exp(M) by scaling and squaring with a fixed-order Taylor polynomial.
///
/// Relative accuracy is better than 1e-12 for ||M|| <= 10.  Throws
/// std::domain_error if M has non-finite entries or ||M|| > 50.
[[nodiscard]] ComplexMatrix4 mat_exp(const ComplexMatrix4& m);

/// True when ||A - A^dagger|| (max entry) <= tol * max(1, max|A|).
[[nodiscard]] bool is_hermitian(const ComplexMatrix4& a, double tol = 1e-12);

}  // namespace dirac
