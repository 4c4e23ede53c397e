// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Spinor and vector representations of the proper orthochronous Lorentz
// group, plus the discrete P, T, C, CP and CPT maps.

#pragma once

#include "dirac/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace dirac {

/// Antisymmetric real parameters omega_{rho sigma}.
class LorentzParams {
public:
    /// Largest |omega_{rho sigma}| accepted.
    static constexpr double kMaxComponent = 10.0;

    LorentzParams() = default;

    /// Validates antisymmetry (exact) and the component bound.
    explicit LorentzParams(const std::array<std::array<double, 4>, 4>& omega);

    /// From the six independent components (01, 02, 03, 12, 13, 23).
    [[nodiscard]] static LorentzParams from_components(const std::array<double, 6>& upper);

    [[nodiscard]] double operator()(int rho, int sigma) const { return omega_[rho][sigma]; }
    [[nodiscard]] std::array<double, 6> components() const;
    [[nodiscard]] const std::array<std::array<double, 4>, 4>& omega() const { return omega_; }

    friend bool operator==(const LorentzParams&, const LorentzParams&) = default;

private:
    std::array<std::array<double, 4>, 4> omega_{};
};

/// S^{rho sigma} = [gamma^rho, gamma^sigma] / 4.
[[nodiscard]] ComplexMatrix4 generator(int rho, int sigma);

/// (1/2) sum_{rho sigma} omega_{rho sigma} S^{rho sigma}.
[[nodiscard]] ComplexMatrix4 lie_algebra_element(const LorentzParams& params);

/// S(Lambda) = exp((1/2) sum omega S).
[[nodiscard]] ComplexMatrix4 spinor_rep(const LorentzParams& params);

/// S(Lambda)^{-1} = exp(-(1/2) sum omega S).
[[nodiscard]] ComplexMatrix4 spinor_rep_inverse(const LorentzParams& params);

/// Lambda^mu_nu defined by S^{-1} gamma^mu S = sum_nu Lambda^mu_nu gamma^nu,
/// recovered by trace projection: Lambda^mu_nu = Tr(gamma_nu S^{-1} gamma^mu S) / 4.
[[nodiscard]] RealMatrix4 vector_rep(const LorentzParams& params);

/// Minkowski metric as a real matrix.
[[nodiscard]] RealMatrix4 minkowski_metric();

enum class DiscreteTransform { P, T, Ccharge, CP, CPT };

[[nodiscard]] bool is_antiunitary(DiscreteTransform t);
[[nodiscard]] std::string_view to_string(DiscreteTransform t);

/// P: gamma^0 psi; T: C psi*; Ccharge: i gamma^2 psi*; CP: -i C gamma^5 psi*; CPT: -i gamma^5 psi.
[[nodiscard]] ComplexVector4 discrete_apply(DiscreteTransform t, const ComplexVector4& psi);

/// Spinor matrix for the linear transforms (P, CPT).  Antiunitary ones have
/// no matrix form and return nullopt.
[[nodiscard]] std::optional<ComplexMatrix4> linear_matrix(DiscreteTransform t);

/// Deterministic parameters with the six independent components uniform in
/// [-scale, scale].  Throws std::invalid_argument unless 0 < scale <= 2.
[[nodiscard]] LorentzParams random_lorentz(std::uint64_t seed, double scale = 0.5);

}  // namespace dirac
