// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Fixed-momentum Dirac-type Hamiltonians and local time evolution.
//
// Plane waves e^{ik.x} are substituted with i d_mu -> -k_mu, which turns the
// Dirac Hamiltonian into the 4x4 matrix
//
//     H = gamma^0 sum_{mu=1..3} gamma^mu (k_mu + q A_mu) + q A_0 I + m gamma^0.
//
// Evolution operators use U = T_<- exp(-i int H dt) throughout.

#pragma once

#include "dirac/states.hpp"
#include "dirac/types.hpp"

#include <array>
#include <functional>
#include <string_view>
#include <variant>
#include <vector>

namespace dirac {

/// g phi gamma^0
struct YukawaScalar {
    double g_phi = 0.0;
};

/// g phi i gamma^0 gamma^5
struct YukawaPseudoscalar {
    double g_phi = 0.0;
};

/// sum_{mu != nu} i gamma^0 gamma^mu gamma^nu d_nu A_mu with grad[nu][mu] = d_nu A_mu.
/// Diagonal entries must be zero (they would give an anti-Hermitian term).
struct PauliCoupling {
    std::array<std::array<double, 4>, 4> grad{};
};

/// sum_{mu=0..3} gamma^0 gamma^mu (I + sign gamma^5) Z_mu, coupling folded into Z.
struct ChiralCoupling {
    std::array<double, 4> z{};
    int sign = 1;  ///< +1 or -1
};

/// M_S gamma^0 gamma^3
struct SemenoffMass {
    double mass = 0.0;
};

/// M_H gamma^5 gamma^0 gamma^3
struct HaldaneMass {
    double mass = 0.0;
};

/// Replaces the kinetic term by -v_D sum_{mu=1,2} gamma^0 gamma^mu (k_mu + q A_mu) - mu_P I.
struct Semimetal2D {
    double v_dirac = 1.0;
    double mu_p = 0.0;
};

/// Replaces the kinetic term by -v_D sum_{mu=1..3} gamma^0 gamma^mu (k_mu + q A_mu).
struct Semimetal3D {
    double v_dirac = 1.0;
};

using ExtraTerm = std::variant<YukawaScalar, YukawaPseudoscalar, PauliCoupling, ChiralCoupling, SemenoffMass,
                               HaldaneMass, Semimetal2D, Semimetal3D>;

/// Tag used in spec files: "yukawa_scalar", "semimetal3d", ...
[[nodiscard]] std::string_view kind_name(const ExtraTerm& term);

struct HamiltonianSpec {
    double mass = 0.0;
    double charge = 1.0;
    std::array<double, 3> momentum{};   ///< k_1, k_2, k_3
    std::array<double, 4> potential{};  ///< A_0 .. A_3
    std::vector<ExtraTerm> extras;

    /// Throws std::invalid_argument on non-finite fields, negative mass,
    /// a chiral sign other than +-1, a nonzero Pauli-coupling diagonal or
    /// more than one semimetal term.
    void validate() const;
};

/// The Hermitian 4x4 Hamiltonian of a spec.
[[nodiscard]] ComplexMatrix4 build_hamiltonian(const HamiltonianSpec& spec);

struct BilinearFlags {
    bool preserves_C = false;
    bool preserves_Cg5 = false;
};

/// Tests X H' = -H'^T X for X = C and X = C gamma^5, where H' is H with its
/// identity component removed (that part only contributes a U(1) phase).
[[nodiscard]] BilinearFlags preserved_bilinears(const ComplexMatrix4& h, double tol = 1e-12);

struct GaugeStripped {
    HamiltonianSpec spec;
    double phase_rate = 0.0;  ///< U(spec) = exp(-i phase_rate t) U(stripped)
};

/// Moves q A_0 and -mu_P out of the spec.
[[nodiscard]] GaugeStripped gauge_strip(const HamiltonianSpec& spec);

/// exp(-i H t).  Throws std::invalid_argument when H is not Hermitian.
[[nodiscard]] ComplexMatrix4 evolve_constant(const ComplexMatrix4& h, double t);

struct Segment {
    double duration = 0.0;
    HamiltonianSpec spec;
};

struct Schedule {
    std::vector<Segment> segments;

    [[nodiscard]] double total_duration() const;
    /// Single segment of the given duration.
    [[nodiscard]] static Schedule constant(const HamiltonianSpec& spec, double duration);
};

/// Product of per-step midpoint exponentials over the schedule, later steps to
/// the left.  Throws std::invalid_argument if steps_per_segment < 1 or a
/// duration is negative.
[[nodiscard]] ComplexMatrix4 evolve_ordered(const Schedule& schedule, int steps_per_segment);

/// Evolution over [0, t] of a schedule (t <= total duration).
[[nodiscard]] ComplexMatrix4 evolve_until(const Schedule& schedule, double t, int steps_per_segment);

using TimeDependentHamiltonian = std::function<ComplexMatrix4(double)>;

/// Midpoint product formula for a smooth H(t) on [t0, t1] with `steps` steps.
[[nodiscard]] ComplexMatrix4 evolve_ordered(const TimeDependentHamiltonian& h, double t0, double t1, int steps);

/// Psi -> U_A Psi U_B^T.
[[nodiscard]] TwoSpinorState evolve_two_lab(const TwoSpinorState& state, const Schedule& sched_a,
                                            const Schedule& sched_b, int steps_per_segment);

/// I1(t_A, t_B) for H = m gamma^0 in each lab, from the block determinants of the
/// initial state: d00 e^{-2i(mA tA + mB tB)} + d01 e^{-2i(mA tA - mB tB)}
///          + d10 e^{2i(mA tA - mB tB)} + d11 e^{2i(mA tA + mB tB)}.
[[nodiscard]] Complex i1_closed_form(const TwoSpinorState& state0, double m_a, double m_b, double t_a, double t_b);

struct PeriodPrediction {
    double t_a = 0.0;  ///< +inf when the energy gap vanishes
    double t_b = 0.0;
};

/// pi / sqrt(sum (k_mu + q A_mu)^2 + m^2) for each lab.  Only plain Dirac
/// specs are accepted; extras throw std::invalid_argument.
[[nodiscard]] double predict_period(const HamiltonianSpec& spec);
[[nodiscard]] PeriodPrediction predict_periods(const HamiltonianSpec& spec_a, const HamiltonianSpec& spec_b);

}  // namespace dirac
