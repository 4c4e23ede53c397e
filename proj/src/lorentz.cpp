// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/lorentz.hpp"

#include "dirac/algebra.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

constexpr std::array<std::array<int, 2>, 6> kIndependentPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

LorentzParams::LorentzParams(const std::array<std::array<double, 4>, 4>& omega) : omega_(omega) {
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            const double w = omega[r][s];
            if (!std::isfinite(w)) throw std::invalid_argument("omega must be finite");
            if (w != -omega[s][r]) {
                throw std::invalid_argument("omega must be antisymmetric; entry (" + std::to_string(r) + "," +
                                            std::to_string(s) + ") violates it");
            }
            if (std::abs(w) > kMaxComponent) throw std::invalid_argument("omega component exceeds bound 10");
        }
    }
}

LorentzParams LorentzParams::from_components(const std::array<double, 6>& upper) {
    std::array<std::array<double, 4>, 4> w{};
    for (std::size_t i = 0; i < kIndependentPairs.size(); ++i) {
        const auto [r, s] = kIndependentPairs[i];
        w[r][s] = upper[i];
        w[s][r] = -upper[i];
    }
    return LorentzParams(w);
}

std::array<double, 6> LorentzParams::components() const {
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < kIndependentPairs.size(); ++i) {
        const auto [r, s] = kIndependentPairs[i];
        out[i] = omega_[r][s];
    }
    return out;
}

ComplexMatrix4 generator(int rho, int sigma) { return 0.25 * commutator(gamma(rho), gamma(sigma)); }

ComplexMatrix4 lie_algebra_element(const LorentzParams& params) {
    ComplexMatrix4 x;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            if (params(r, s) != 0.0) x += (0.5 * params(r, s)) * generator(r, s);
    return x;
}

ComplexMatrix4 spinor_rep(const LorentzParams& params) { return mat_exp(lie_algebra_element(params)); }

ComplexMatrix4 spinor_rep_inverse(const LorentzParams& params) { return mat_exp(-lie_algebra_element(params)); }

RealMatrix4 vector_rep(const LorentzParams& params) {
    const ComplexMatrix4 s = spinor_rep(params);
    const ComplexMatrix4 s_inv = spinor_rep_inverse(params);
    RealMatrix4 lambda;
    for (int mu = 0; mu < 4; ++mu) {
        const ComplexMatrix4 conj = s_inv * gamma(mu) * s;
        for (int nu = 0; nu < 4; ++nu) {
            // gamma_nu = g_{nu nu} gamma^nu, so Tr(gamma_nu gamma^lambda) = 4 delta
            const Complex t = (metric(nu, nu) * gamma(nu) * conj).trace();
            lambda(mu, nu) = 0.25 * t.real();
        }
    }
    return lambda;
}

RealMatrix4 minkowski_metric() {
    RealMatrix4 g;
    for (int i = 0; i < 4; ++i) g(i, i) = metric(i, i);
    return g;
}

bool is_antiunitary(DiscreteTransform t) {
    return t == DiscreteTransform::T || t == DiscreteTransform::Ccharge || t == DiscreteTransform::CP;
}

std::string_view to_string(DiscreteTransform t) {
    switch (t) {
        case DiscreteTransform::P: return "P";
        case DiscreteTransform::T: return "T";
        case DiscreteTransform::Ccharge: return "C";
        case DiscreteTransform::CP: return "CP";
        case DiscreteTransform::CPT: return "CPT";
    }
    return "?";
}

ComplexVector4 discrete_apply(DiscreteTransform t, const ComplexVector4& psi) {
    switch (t) {
        case DiscreteTransform::P: return gamma(0) * psi;
        case DiscreteTransform::T: return conjugation_C() * psi.conj();
        case DiscreteTransform::Ccharge: return (kI * gamma(2)) * psi.conj();
        case DiscreteTransform::CP: return (-kI * conjugation_C_gamma5()) * psi.conj();
        case DiscreteTransform::CPT: return (-kI * gamma5()) * psi;
    }
    throw std::invalid_argument("unknown discrete transform");
}

std::optional<ComplexMatrix4> linear_matrix(DiscreteTransform t) {
    switch (t) {
        case DiscreteTransform::P: return gamma(0);
        case DiscreteTransform::CPT: return -kI * gamma5();
        default: return std::nullopt;
    }
}

LorentzParams random_lorentz(std::uint64_t seed, double scale) {
    if (!(scale > 0.0 && scale <= 2.0)) throw std::invalid_argument("random_lorentz: scale must be in (0, 2]");
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::array<double, 6> c{};
    for (auto& x : c) x = dist(engine);
    return LorentzParams::from_components(c);
}

}  // namespace dirac
