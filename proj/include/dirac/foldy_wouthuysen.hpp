// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// First two Foldy-Wouthuysen transformations on a fixed-momentum subspace.
//
// Field derivatives are constants supplied by the caller.  The generators are
//
//     S1 = (i / 2m) sum_mu gamma^mu (-k_mu - q A_mu)
//     S2 = (q / 4m^2) gamma^0 sum_mu gamma^mu (d_mu A_0 + d_0 A_mu)
//
// with mu = 1..3.  Both are Hermitian, so e^{iS} is unitary (and has unit
// determinant since S is traceless).

#pragma once

#include "dirac/evolution.hpp"
#include "dirac/invariant_record.hpp"
#include "dirac/states.hpp"

#include <array>

namespace dirac {

struct FWFieldData {
    std::array<double, 3> grad_A0{};  ///< d_mu A_0, mu = 1..3
    std::array<double, 3> dt_A{};     ///< d_0 A_mu, mu = 1..3
    /// grad_A[a][b] = d_{a+1} A_{b+1}; only the off-diagonal part enters.
    std::array<std::array<double, 3>, 3> grad_A{};

    void validate() const;
};

/// S_n for n in {1, 2}.  Throws std::invalid_argument for mass <= 0, for a
/// spec with extra terms, or for another n.
[[nodiscard]] ComplexMatrix4 fw_generator(int n, const HamiltonianSpec& spec, const FWFieldData& fields);

class FWContext {
public:
    FWContext(HamiltonianSpec spec, FWFieldData fields);

    [[nodiscard]] const HamiltonianSpec& spec() const { return spec_; }
    [[nodiscard]] const FWFieldData& fields() const { return fields_; }
    [[nodiscard]] const ComplexMatrix4& s1() const { return s1_; }
    [[nodiscard]] const ComplexMatrix4& s2() const { return s2_; }

    /// e^{iS_n} ... e^{iS_1}, n in 0..2.
    [[nodiscard]] ComplexMatrix4 transform(int order) const;

    /// Kernel K with psi^T C phi = psi_(n)^T K phi_(n):
    /// C, C e^{-2iS1}, C e^{iS2} e^{-2iS1} e^{-iS2} for n = 0, 1, 2.
    [[nodiscard]] ComplexMatrix4 c_compensator(int order) const;

private:
    HamiltonianSpec spec_;
    FWFieldData fields_;
    ComplexMatrix4 s1_;
    ComplexMatrix4 s2_;
    ComplexMatrix4 u1_;  // e^{iS1}
    ComplexMatrix4 u2_;  // e^{iS2}
};

/// Psi^(n) = V_A Psi V_B^T with V = e^{iS_n} ... e^{iS_1}.
[[nodiscard]] TwoSpinorState fw_transform_state(const TwoSpinorState& state, const FWContext& ctx_a,
                                                const FWContext& ctx_b, int n_a, int n_b);

/// The five invariants of the original picture evaluated on an FW-picture
/// state of orders (n_a, n_b).  I2 and I3 are plain polynomials of the new
/// coefficients; I1, I2A and I2B carry the compensated C kernel.
[[nodiscard]] InvariantRecord fw_invariants(const TwoSpinorState& state_fw, const FWContext& ctx_a,
                                            const FWContext& ctx_b, int n_a = 2, int n_b = 2);

/// H_FW(2) through order 1/m:
///   q A_0 I + m gamma^0 + (1/2m) gamma^0 (k + qA)^2
///   - (iq/2m) gamma^0 sum_{mu != nu} gamma^mu gamma^nu d_nu A_mu.
[[nodiscard]] ComplexMatrix4 fw_hamiltonian2(const HamiltonianSpec& spec, const FWFieldData& fields);

/// (q A_0 + m + (k + qA)^2 / 2m) I - (iq/2m) sum_{mu != nu} sigma^mu sigma^nu d_mu A_nu.
[[nodiscard]] ComplexMatrix2 pauli_hamiltonian(const HamiltonianSpec& spec, const FWFieldData& fields);

}  // namespace dirac
