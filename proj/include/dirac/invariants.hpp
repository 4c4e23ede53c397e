// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Lorentz-invariant polynomials of a two-spinor state.
//
// The coefficient expansions are the primary definitions.  Each invariant
// also has a trace form  (1/2) Tr[Psi^T X_A Psi X_B]  with kernels
// X in {C, C gamma^5} (X_A in Alice's basis, X_B in Bob's), and the degree-2
// ones are sums of four 2x2 minors.  The alternative forms exist as
// cross-checks; they accept an explicit kernel set so a corrupted kernel can
// be injected in tests.
//
//   i1  = (1/2) Tr[Psi^T C       Psi C      ]
//   i2  = (1/2) Tr[Psi^T C g5    Psi C g5   ]
//   i2a = (1/2) Tr[Psi^T C       Psi C g5   ]
//   i2b = (1/2) Tr[Psi^T C g5    Psi C      ]
//   i3  = det Psi

#pragma once

#include "dirac/invariant_record.hpp"
#include "dirac/states.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dirac {

[[nodiscard]] Complex i1(const TwoSpinorState& state);
[[nodiscard]] Complex i2(const TwoSpinorState& state);
[[nodiscard]] Complex i2a(const TwoSpinorState& state);
[[nodiscard]] Complex i2b(const TwoSpinorState& state);
[[nodiscard]] Complex i3(const TwoSpinorState& state);

[[nodiscard]] InvariantRecord all_invariants(const TwoSpinorState& state);

/// The two antisymmetric bilinear kernels.
struct KernelSet {
    ComplexMatrix4 c;
    ComplexMatrix4 c_gamma5;

    [[nodiscard]] static KernelSet standard();
};

namespace trace_form {

/// (1/2) Tr[Psi^T x_a Psi x_b]
[[nodiscard]] Complex bilinear_trace(const TwoSpinorState& state, const ComplexMatrix4& x_a,
                                     const ComplexMatrix4& x_b);

[[nodiscard]] Complex i1(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());
[[nodiscard]] Complex i2(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());
[[nodiscard]] Complex i2a(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());
[[nodiscard]] Complex i2b(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());
/// -(1/4) Tr[(Psi^T C Psi C)^2] + i1^2 / 2
[[nodiscard]] Complex i3_via_c(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());
/// -(1/4) Tr[(Psi^T Cg5 Psi Cg5)^2] + i2^2 / 2
[[nodiscard]] Complex i3_via_c_gamma5(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());

[[nodiscard]] InvariantRecord all(const TwoSpinorState& state, const KernelSet& k = KernelSet::standard());

}  // namespace trace_form

/// Determinant of the 2x2 minor with rows (r0, r1) and columns (c0, c1).
[[nodiscard]] Complex minor2(const TwoSpinorState& state, std::size_t r0, std::size_t r1, std::size_t c0,
                             std::size_t c1);

/// The four diagonal-block-row/col 2x2 block determinants d_{ab}, a, b in {0, 1}
/// (block a of rows, block b of columns).  i1 is their sum.
[[nodiscard]] std::array<Complex, 4> block_determinants(const TwoSpinorState& state);

/// i1 as the sum of the four block determinants.
[[nodiscard]] Complex i1_from_blocks(const TwoSpinorState& state);

/// Sanity check of the maximal absolute values (1/2 for degree 2, 1/16 for
/// i3) for unit-normalized states.  Returns the names of violated bounds.
[[nodiscard]] std::vector<std::string> bound_violations(const InvariantRecord& r, double tol = 1e-9);

enum class ParityClass {
    BothLabs,   ///< P and CPT invariant in both labs
    AliceOnly,  ///< CPT invariant in both labs, P invariant in Alice's lab only
    BobOnly,    ///< CPT invariant in both labs, P invariant in Bob's lab only
    Neither,    ///< CPT invariant in both labs, not P invariant in either lab
};

[[nodiscard]] std::string_view describe(ParityClass c);

struct Degree4Product {
    std::string label;  ///< e.g. "I1*I2A"
    InvariantId left;
    InvariantId right;
    ParityClass parity;
    Complex value;
};

/// The ten degree-4 products I1^2, I2^2, I2A^2, I2B^2, I1 I2A, I2 I2B,
/// I1 I2B, I2 I2A, I1 I2, I2A I2B.
[[nodiscard]] std::vector<Degree4Product> degree4_products(const InvariantRecord& r);

/// psi00 psi11 - psi01 psi10 for a state that is a Weyl state on both sides.
/// Throws std::invalid_argument otherwise.
[[nodiscard]] Complex wootters_weyl(const TwoSpinorState& state, double tol = 1e-12);

/// Handedness found on a side, if the state is a Weyl state there.
[[nodiscard]] std::optional<Hand> weyl_hand(const TwoSpinorState& state, Side side, double tol = 1e-12);

}  // namespace dirac
