// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/invariants.hpp"

#include "dirac/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac {

namespace {

// p(j, k) shorthand keeps the expansions readable against their printed form.
struct Coeffs {
    const TwoSpinorState& s;
    Complex operator()(std::size_t j, std::size_t k) const { return s(j, k); }
};

}  // namespace

Complex i1(const TwoSpinorState& state) {
    const Coeffs p{state};
    return p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0) + p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2)  //
           + p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0) + p(2, 2) * p(3, 3) - p(2, 3) * p(3, 2);
}

Complex i2(const TwoSpinorState& state) {
    const Coeffs p{state};
    return p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3) + p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)  //
           + p(0, 2) * p(3, 1) - p(0, 1) * p(3, 2) + p(0, 0) * p(3, 3) - p(0, 3) * p(3, 0);
}

Complex i2a(const TwoSpinorState& state) {
    const Coeffs p{state};
    return p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0) + p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2)  //
           + p(2, 2) * p(3, 1) - p(2, 1) * p(3, 2) + p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0);
}

Complex i2b(const TwoSpinorState& state) {
    const Coeffs p{state};
    return p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) + p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3)  //
           + p(0, 0) * p(3, 1) - p(0, 1) * p(3, 0) + p(0, 2) * p(3, 3) - p(0, 3) * p(3, 2);
}

Complex i3(const TwoSpinorState& state) {
    const Coeffs p{state};
    const Complex row1 =
        p(0, 1) * (p(3, 0) * (p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3)) + p(3, 2) * (p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0)) +
                   p(3, 3) * (p(1, 2) * p(2, 0) - p(1, 0) * p(2, 2)));
    const Complex row0 =
        p(0, 0) * (p(3, 1) * (p(1, 2) * p(2, 3) - p(1, 3) * p(2, 2)) + p(3, 2) * (p(1, 3) * p(2, 1) - p(1, 1) * p(2, 3)) +
                   p(3, 3) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)));
    const Complex row3 =
        p(0, 3) * (p(3, 0) * (p(1, 2) * p(2, 1) - p(1, 1) * p(2, 2)) + p(3, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
                   p(3, 2) * (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1)));
    const Complex row2 =
        p(0, 2) * (p(3, 0) * (p(1, 1) * p(2, 3) - p(1, 3) * p(2, 1)) + p(3, 1) * (p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3)) +
                   p(3, 3) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0)));
    return row1 + row0 + row3 + row2;
}

InvariantRecord all_invariants(const TwoSpinorState& state) {
    return {i1(state), i2(state), i2a(state), i2b(state), i3(state)};
}

KernelSet KernelSet::standard() { return {conjugation_C(), conjugation_C_gamma5()}; }

namespace trace_form {

Complex bilinear_trace(const TwoSpinorState& state, const ComplexMatrix4& x_a, const ComplexMatrix4& x_b) {
    const ComplexMatrix4& psi = state.coeffs;
    return 0.5 * (psi.transpose() * x_a * psi * x_b).trace();
}

Complex i1(const TwoSpinorState& state, const KernelSet& k) { return bilinear_trace(state, k.c, k.c); }
Complex i2(const TwoSpinorState& state, const KernelSet& k) { return bilinear_trace(state, k.c_gamma5, k.c_gamma5); }
Complex i2a(const TwoSpinorState& state, const KernelSet& k) { return bilinear_trace(state, k.c, k.c_gamma5); }
Complex i2b(const TwoSpinorState& state, const KernelSet& k) { return bilinear_trace(state, k.c_gamma5, k.c); }

namespace {

Complex quartic(const TwoSpinorState& state, const ComplexMatrix4& x) {
    const ComplexMatrix4& psi = state.coeffs;
    const ComplexMatrix4 m = psi.transpose() * x * psi * x;
    const Complex half_trace = 0.5 * m.trace();
    return -0.25 * (m * m).trace() + 0.5 * half_trace * half_trace;
}

}  // namespace

Complex i3_via_c(const TwoSpinorState& state, const KernelSet& k) { return quartic(state, k.c); }
Complex i3_via_c_gamma5(const TwoSpinorState& state, const KernelSet& k) { return quartic(state, k.c_gamma5); }

InvariantRecord all(const TwoSpinorState& state, const KernelSet& k) {
    return {i1(state, k), i2(state, k), i2a(state, k), i2b(state, k), i3_via_c(state, k)};
}

}  // namespace trace_form

Complex minor2(const TwoSpinorState& state, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return state(r0, c0) * state(r1, c1) - state(r0, c1) * state(r1, c0);
}

std::array<Complex, 4> block_determinants(const TwoSpinorState& state) {
    return {minor2(state, 0, 1, 0, 1), minor2(state, 0, 1, 2, 3), minor2(state, 2, 3, 0, 1),
            minor2(state, 2, 3, 2, 3)};
}

Complex i1_from_blocks(const TwoSpinorState& state) {
    const auto d = block_determinants(state);
    return d[0] + d[1] + d[2] + d[3];
}

std::vector<std::string> bound_violations(const InvariantRecord& r, double tol) {
    std::vector<std::string> out;
    for (InvariantId id : kAllInvariants) {
        const double bound = id == InvariantId::I3 ? 1.0 / 16.0 : 0.5;
        if (std::abs(r[id]) > bound + tol) out.emplace_back(to_string(id));
    }
    return out;
}

std::string_view describe(ParityClass c) {
    switch (c) {
        case ParityClass::BothLabs: return "P and CPT invariant in both labs";
        case ParityClass::AliceOnly: return "P invariant in Alice's lab only";
        case ParityClass::BobOnly: return "P invariant in Bob's lab only";
        case ParityClass::Neither: return "not P invariant in either lab";
    }
    return "?";
}

std::vector<Degree4Product> degree4_products(const InvariantRecord& r) {
    using enum InvariantId;
    struct Pair {
        const char* label;
        InvariantId a;
        InvariantId b;
        ParityClass parity;
    };
    static constexpr std::array<Pair, 10> kPairs{{
        {"I1^2", I1, I1, ParityClass::BothLabs},
        {"I2^2", I2, I2, ParityClass::BothLabs},
        {"I2A^2", I2A, I2A, ParityClass::BothLabs},
        {"I2B^2", I2B, I2B, ParityClass::BothLabs},
        {"I1*I2A", I1, I2A, ParityClass::AliceOnly},
        {"I2*I2B", I2, I2B, ParityClass::AliceOnly},
        {"I1*I2B", I1, I2B, ParityClass::BobOnly},
        {"I2*I2A", I2, I2A, ParityClass::BobOnly},
        {"I1*I2", I1, I2, ParityClass::Neither},
        {"I2A*I2B", I2A, I2B, ParityClass::Neither},
    }};
    std::vector<Degree4Product> out;
    out.reserve(kPairs.size());
    for (const auto& p : kPairs) out.push_back({p.label, p.a, p.b, p.parity, r[p.a] * r[p.b]});
    return out;
}

std::optional<Hand> weyl_hand(const TwoSpinorState& state, Side side, double tol) {
    if (has_weyl_symmetry(state, side, Hand::Right, tol)) return Hand::Right;
    if (has_weyl_symmetry(state, side, Hand::Left, tol)) return Hand::Left;
    return std::nullopt;
}

Complex wootters_weyl(const TwoSpinorState& state, double tol) {
    const double scale = std::max(1.0, state.coeffs.max_abs());
    if (!weyl_hand(state, Side::Alice, tol * scale) || !weyl_hand(state, Side::Bob, tol * scale)) {
        throw std::invalid_argument("wootters_weyl: state is not a Weyl state on both sides");
    }
    return minor2(state, 0, 1, 0, 1);
}

}  // namespace dirac
