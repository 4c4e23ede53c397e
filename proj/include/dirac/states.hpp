// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// One- and two-spinor states on fixed-momentum subspaces.
//
// A two-spinor state is the 4x4 coefficient matrix psi_{jk} with row j for
// Alice's basis index and column k for Bob's.  Local maps act as
// Psi -> S_A Psi S_B^T.

#pragma once

#include "dirac/algebra.hpp"
#include "dirac/invariant_record.hpp"
#include "dirac/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dirac {

struct Spinor {
    ComplexVector4 amps{};

    [[nodiscard]] static Spinor basis(std::size_t j) { return {ComplexVector4::basis(j)}; }
    [[nodiscard]] double norm_squared() const { return amps.norm_squared(); }
    [[nodiscard]] bool is_unit(double tol = 1e-12) const;
};

struct TwoSpinorState {
    ComplexMatrix4 coeffs{};

    [[nodiscard]] Complex operator()(std::size_t j, std::size_t k) const { return coeffs(j, k); }
    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] bool is_normalized(double tol = 1e-12) const;
    /// Returns the state scaled to unit norm; throws std::domain_error for the zero state.
    [[nodiscard]] TwoSpinorState normalized() const;
};

enum class Side { Alice, Bob };

/// psi_{jk} = a_j b_k
[[nodiscard]] TwoSpinorState product_state(const Spinor& a, const Spinor& b);

/// Psi -> S_A Psi S_B^T
[[nodiscard]] TwoSpinorState apply_local(const TwoSpinorState& state, const ComplexMatrix4& s_a,
                                         const ComplexMatrix4& s_b);

/// Applies the chiral projector P_hand on one side.
[[nodiscard]] TwoSpinorState weyl_project(const TwoSpinorState& state, Side side, Hand hand);

/// Checks psi_{jk} = (-1)^{|L|} psi_{(j-2)k} (Alice) or the column analogue (Bob),
/// indices mod 4, to absolute tolerance tol.
[[nodiscard]] bool has_weyl_symmetry(const TwoSpinorState& state, Side side, Hand hand, double tol = 1e-12);

/// psi^dagger phi on a fixed-momentum subspace.
[[nodiscard]] Complex inner_fixed_k(const Spinor& psi, const Spinor& phi);

struct CatalogEntry {
    std::string name;
    std::string description;
    TwoSpinorState state;
    InvariantMagnitudes expected;
};

/// Names accepted by catalog(), in display order.
[[nodiscard]] const std::vector<std::string>& catalog_names();

/// Example states.  Unknown names throw std::invalid_argument listing the valid ones.
[[nodiscard]] CatalogEntry catalog(std::string_view name);

}  // namespace dirac
