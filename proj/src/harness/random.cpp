// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/random.hpp"

#include <cmath>

namespace dirac::harness {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

Complex random_complex(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    return {re, n(rng)};
}

Spinor random_spinor(Rng& rng) {
    Spinor s;
    for (auto& a : s.amps.amps) a = random_complex(rng);
    return s;
}

TwoSpinorState random_state(Rng& rng) {
    TwoSpinorState s;
    for (auto& e : s.coeffs.entries()) e = random_complex(rng);
    return s.normalized();
}

ComplexMatrix4 random_matrix(Rng& rng, double scale) {
    ComplexMatrix4 m;
    for (auto& e : m.entries()) e = scale * random_complex(rng);
    return m;
}

ComplexMatrix4 random_hermitian(Rng& rng, double scale) {
    const ComplexMatrix4 g = random_matrix(rng, scale);
    return 0.5 * (g + g.adjoint());
}

LorentzParams random_params(Rng& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::array<double, 6> c{};
    for (double& x : c) x = u(rng);
    return LorentzParams::from_components(c);
}

ComplexMatrix4 random_sl4(Rng& rng) {
    const ComplexMatrix4 m = ComplexMatrix4::identity() + random_matrix(rng, 0.5);
    const Complex d = determinant(m);
    return m * (1.0 / std::pow(d, 0.25));
}

TwoSpinorState random_weyl_state(Rng& rng, Hand hand_a, Hand hand_b) {
    TwoSpinorState s;
    for (auto& e : s.coeffs.entries()) e = random_complex(rng);
    return apply_local(s, chiral_projector(hand_a), chiral_projector(hand_b)).normalized();
}

HamiltonianSpec random_dirac_spec(Rng& rng, bool massive) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HamiltonianSpec s;
    s.mass = massive ? 0.25 + 1.5 * std::abs(u(rng)) : 0.0;
    s.charge = u(rng);
    for (double& k : s.momentum) k = u(rng);
    for (double& a : s.potential) a = u(rng);
    return s;
}

HamiltonianSpec random_spec(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<int> pick(0, 7);
    HamiltonianSpec s = random_dirac_spec(rng, coin(rng));
    const int terms = std::uniform_int_distribution<int>(0, 2)(rng);
    bool semimetal = false;
    for (int n = 0; n < terms; ++n) {
        switch (pick(rng)) {
            case 0: s.extras.emplace_back(YukawaScalar{u(rng)}); break;
            case 1: s.extras.emplace_back(YukawaPseudoscalar{u(rng)}); break;
            case 2: {
                PauliCoupling p;
                for (int nu = 0; nu < 4; ++nu) {
                    for (int mu = 0; mu < 4; ++mu) p.grad[nu][mu] = mu == nu ? 0.0 : 0.5 * u(rng);
                }
                s.extras.emplace_back(p);
                break;
            }
            case 3: s.extras.emplace_back(ChiralCoupling{{u(rng), u(rng), u(rng), u(rng)}, coin(rng) ? 1 : -1}); break;
            case 4: s.extras.emplace_back(SemenoffMass{u(rng)}); break;
            case 5: s.extras.emplace_back(HaldaneMass{u(rng)}); break;
            case 6:
                if (!semimetal) s.extras.emplace_back(Semimetal2D{1.0 + 0.5 * u(rng), u(rng)});
                semimetal = true;
                break;
            default:
                if (!semimetal) s.extras.emplace_back(Semimetal3D{1.0 + 0.5 * u(rng)});
                semimetal = true;
                break;
        }
    }
    return s;
}

}  // namespace dirac::harness
