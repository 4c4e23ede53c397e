// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/foldy_wouthuysen.hpp"

#include "dirac/algebra.hpp"
#include "dirac/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dirac {

namespace {

void require_fw_spec(const HamiltonianSpec& spec) {
    spec.validate();
    if (!(spec.mass > 0.0)) throw std::invalid_argument("Foldy-Wouthuysen: mass must be > 0");
    if (!spec.extras.empty()) throw std::invalid_argument("Foldy-Wouthuysen: extra Hamiltonian terms are not supported");
}

void check_order(int n) {
    if (n < 0 || n > 2) throw std::invalid_argument("Foldy-Wouthuysen: order must be 0, 1 or 2");
}

double kinetic_momentum(const HamiltonianSpec& spec, int mu) {
    return spec.momentum[mu - 1] + spec.charge * spec.potential[mu];
}

double kinetic_energy_term(const HamiltonianSpec& spec) {
    double p2 = 0.0;
    for (int mu = 1; mu <= 3; ++mu) p2 += kinetic_momentum(spec, mu) * kinetic_momentum(spec, mu);
    return p2 / (2.0 * spec.mass);
}

}  // namespace

void FWFieldData::validate() const {
    auto ok = [](const auto& a) {
        for (double x : a) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    };
    if (!ok(grad_A0) || !ok(dt_A) || !ok(grad_A[0]) || !ok(grad_A[1]) || !ok(grad_A[2])) {
        throw std::invalid_argument("FWFieldData: non-finite field derivative");
    }
}

ComplexMatrix4 fw_generator(int n, const HamiltonianSpec& spec, const FWFieldData& fields) {
    require_fw_spec(spec);
    fields.validate();
    const double m = spec.mass;
    ComplexMatrix4 s;
    if (n == 1) {
        for (int mu = 1; mu <= 3; ++mu) s += (kI * (-kinetic_momentum(spec, mu) / (2.0 * m))) * gamma(mu);
    } else if (n == 2) {
        const double scale = spec.charge / (4.0 * m * m);
        for (int mu = 1; mu <= 3; ++mu) {
            s += Complex{scale * (fields.grad_A0[mu - 1] + fields.dt_A[mu - 1])} * (gamma(0) * gamma(mu));
        }
    } else {
        throw std::invalid_argument("fw_generator: n must be 1 or 2");
    }
    return s;
}

FWContext::FWContext(HamiltonianSpec spec, FWFieldData fields)
    : spec_(std::move(spec)),
      fields_(fields),
      s1_(fw_generator(1, spec_, fields_)),
      s2_(fw_generator(2, spec_, fields_)),
      u1_(mat_exp(kI * s1_)),
      u2_(mat_exp(kI * s2_)) {}

ComplexMatrix4 FWContext::transform(int order) const {
    check_order(order);
    if (order == 0) return ComplexMatrix4::identity();
    if (order == 1) return u1_;
    return u2_ * u1_;
}

ComplexMatrix4 FWContext::c_compensator(int order) const {
    check_order(order);
    const ComplexMatrix4 c = conjugation_C();
    if (order == 0) return c;
    // e^{-2iS1} = (e^{iS1}^dagger)^2 since S1 is Hermitian.
    const ComplexMatrix4 u1_inv = u1_.adjoint();
    if (order == 1) return c * u1_inv * u1_inv;
    return c * u2_ * u1_inv * u1_inv * u2_.adjoint();
}

TwoSpinorState fw_transform_state(const TwoSpinorState& state, const FWContext& ctx_a, const FWContext& ctx_b,
                                  int n_a, int n_b) {
    return apply_local(state, ctx_a.transform(n_a), ctx_b.transform(n_b));
}

InvariantRecord fw_invariants(const TwoSpinorState& state_fw, const FWContext& ctx_a, const FWContext& ctx_b,
                              int n_a, int n_b) {
    const ComplexMatrix4 cg5 = conjugation_C_gamma5();
    const ComplexMatrix4 k_a = ctx_a.c_compensator(n_a);
    const ComplexMatrix4 k_b = ctx_b.c_compensator(n_b);
    InvariantRecord r;
    r.i1 = trace_form::bilinear_trace(state_fw, k_a, k_b);
    r.i2 = trace_form::bilinear_trace(state_fw, cg5, cg5);
    r.i2a = trace_form::bilinear_trace(state_fw, k_a, cg5);
    r.i2b = trace_form::bilinear_trace(state_fw, cg5, k_b);
    r.i3 = determinant(state_fw.coeffs);
    return r;
}

ComplexMatrix4 fw_hamiltonian2(const HamiltonianSpec& spec, const FWFieldData& fields) {
    require_fw_spec(spec);
    fields.validate();
    const ComplexMatrix4 g0 = gamma(0);
    ComplexMatrix4 h = Complex{spec.charge * spec.potential[0]} * ComplexMatrix4::identity() +
                       Complex{spec.mass + kinetic_energy_term(spec)} * g0;
    const Complex magnetic = -kI * (spec.charge / (2.0 * spec.mass));
    for (int mu = 1; mu <= 3; ++mu) {
        for (int nu = 1; nu <= 3; ++nu) {
            if (mu == nu) continue;
            h += (magnetic * fields.grad_A[nu - 1][mu - 1]) * (g0 * gamma(mu) * gamma(nu));
        }
    }
    return h;
}

ComplexMatrix2 pauli_hamiltonian(const HamiltonianSpec& spec, const FWFieldData& fields) {
    require_fw_spec(spec);
    fields.validate();
    ComplexMatrix2 h = Complex{spec.charge * spec.potential[0] + spec.mass + kinetic_energy_term(spec)} *
                       ComplexMatrix2::identity();
    const Complex magnetic = -kI * (spec.charge / (2.0 * spec.mass));
    for (int mu = 1; mu <= 3; ++mu) {
        for (int nu = 1; nu <= 3; ++nu) {
            if (mu == nu) continue;
            h = h + (magnetic * fields.grad_A[mu - 1][nu - 1]) * (pauli(mu) * pauli(nu));
        }
    }
    return h;
}

}  // namespace dirac
