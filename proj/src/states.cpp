// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/states.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac {

bool Spinor::is_unit(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

double TwoSpinorState::norm_squared() const {
    double s = 0.0;
    for (const auto& c : coeffs.entries()) s += std::norm(c);
    return s;
}

bool TwoSpinorState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

TwoSpinorState TwoSpinorState::normalized() const {
    const double n = norm_squared();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
    return {(1.0 / std::sqrt(n)) * coeffs};
}

TwoSpinorState product_state(const Spinor& a, const Spinor& b) {
    return {ComplexMatrix4::outer(a.amps, b.amps)};
}

TwoSpinorState apply_local(const TwoSpinorState& state, const ComplexMatrix4& s_a, const ComplexMatrix4& s_b) {
    return {s_a * state.coeffs * s_b.transpose()};
}

TwoSpinorState weyl_project(const TwoSpinorState& state, Side side, Hand hand) {
    const ComplexMatrix4 p = chiral_projector(hand);
    const ComplexMatrix4 id = ComplexMatrix4::identity();
    return side == Side::Alice ? apply_local(state, p, id) : apply_local(state, id, p);
}

bool has_weyl_symmetry(const TwoSpinorState& state, Side side, Hand hand, double tol) {
    const double sign = hand == Hand::Left ? -1.0 : 1.0;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            const Complex shifted = side == Side::Alice ? state((j + 2) % 4, k) : state(j, (k + 2) % 4);
            if (std::abs(state(j, k) - sign * shifted) > tol) return false;
        }
    }
    return true;
}

Complex inner_fixed_k(const Spinor& psi, const Spinor& phi) { return dot_conj(psi.amps, phi.amps); }

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

// Amplitude phase * numerator / sqrt(denominator) at (j, k).
struct SymbolicTerm {
    std::size_t j;
    std::size_t k;
    Complex phase;
    double numerator;
    double denominator;
};

TwoSpinorState render(std::initializer_list<SymbolicTerm> terms) {
    TwoSpinorState s;
    for (const auto& t : terms) s.coeffs(t.j, t.k) += t.phase * (t.numerator / std::sqrt(t.denominator));
    return s;
}

const Complex kOne{1.0, 0.0};
const Complex kMinusOne{-1.0, 0.0};
const Complex kMinusI{0.0, -1.0};

CatalogEntry make_entry(std::string_view name) {
    if (name == "epr") {
        return {"epr", "(phi0 x phi1 - i phi1 x phi0)/sqrt2; only I1 nonzero",
                render({{0, 1, kOne, 1, 2}, {1, 0, kMinusI, 1, 2}}), {0.5, 0, 0, 0, 0}};
    }
    if (name == "i2_max") {
        return {"i2_max", "(phi1 x phi3 - phi2 x phi0)/sqrt2; only I2 nonzero",
                render({{1, 3, kOne, 1, 2}, {2, 0, kMinusOne, 1, 2}}), {0, 0.5, 0, 0, 0}};
    }
    if (name == "i2a_max") {
        return {"i2a_max", "(phi0 x phi0 - phi1 x phi3)/sqrt2; only I2A nonzero",
                render({{0, 0, kOne, 1, 2}, {1, 3, kMinusOne, 1, 2}}), {0, 0, 0.5, 0, 0}};
    }
    if (name == "i2b_max") {
        return {"i2b_max", "(phi1 x phi1 - phi2 x phi0)/sqrt2; only I2B nonzero",
                render({{1, 1, kOne, 1, 2}, {2, 0, kMinusOne, 1, 2}}), {0, 0, 0, 0.5, 0}};
    }
    if (name == "i3_max") {
        // Real-phase variant: all four degree-2 invariants vanish, |I3| = 1/16.
        return {"i3_max", "(phi0 x phi1 + phi3 x phi0 + phi2 x phi3 - phi1 x phi2)/2; only I3 nonzero",
                render({{0, 1, kOne, 1, 4}, {3, 0, kOne, 1, 4}, {2, 3, kOne, 1, 4}, {1, 2, kMinusOne, 1, 4}}),
                {0, 0, 0, 0, 0.0625}};
    }
    if (name == "i3_max_printed") {
        // With the phases (1, 1, i, i) the I2A minors do not cancel: I2A = -i/2.
        return {"i3_max_printed", "(phi0 x phi1 + phi3 x phi0 + i phi2 x phi3 + i phi1 x phi2)/2; I2A and I3 nonzero",
                render({{0, 1, kOne, 1, 4}, {3, 0, kOne, 1, 4}, {2, 3, kI, 1, 4}, {1, 2, kI, 1, 4}}),
                {0, 0, 0.5, 0, 0.0625}};
    }
    if (name == "chiral_epr") {
        return {"chiral_epr",
                "[(phi1+phi3) x (phi0+phi2) - i (phi0+phi2) x (phi1+phi3)]/sqrt8; right-handed on both sides",
                render({{1, 0, kOne, 1, 8},
                        {1, 2, kOne, 1, 8},
                        {3, 0, kOne, 1, 8},
                        {3, 2, kOne, 1, 8},
                        {0, 1, kMinusI, 1, 8},
                        {0, 3, kMinusI, 1, 8},
                        {2, 1, kMinusI, 1, 8},
                        {2, 3, kMinusI, 1, 8}}),
                {0.5, 0.5, 0.5, 0.5, 0}};
    }
    if (name == "decay") {
        return {"decay", "(phi0 x phi3 - i phi1 x phi2)/sqrt2; spin-zero decay product, only I1 nonzero",
                render({{0, 3, kOne, 1, 2}, {1, 2, kMinusI, 1, 2}}), {0.5, 0, 0, 0, 0}};
    }
    if (name == "decay_symmetric") {
        return {"decay_symmetric", "(phi0 x phi3 + phi3 x phi0 - phi1 x phi2 - phi2 x phi1)/2; I2A = I2B = 0",
                render({{0, 3, kOne, 1, 4}, {3, 0, kOne, 1, 4}, {1, 2, kMinusOne, 1, 4}, {2, 1, kMinusOne, 1, 4}}),
                {0.5, 0.5, 0, 0, 0.0625}};
    }
    std::string valid;
    for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown catalog state '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"epr",    "i2_max",         "i2a_max",    "i2b_max", "i3_max",
                                                "i3_max_printed", "chiral_epr", "decay",   "decay_symmetric"};
    return names;
}

CatalogEntry catalog(std::string_view name) { return make_entry(name); }

}  // namespace dirac
