// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/invariants.hpp"
#include "dirac/states.hpp"
#include "dirac/lorentz.hpp"
#include "dirac/algebra.hpp"
#include "dirac/harness/random.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string_view>

using namespace dirac;

namespace {

// Evaluates a signed sum of coefficient products written as "+00*11-01*10...".
Complex eval_expansion(const TwoSpinorState& s, std::string_view text) {
    Complex total{};
    std::size_t i = 0;
    while (i < text.size()) {
        const double sign = text[i] == '-' ? -1.0 : 1.0;
        ++i;
        Complex term{sign, 0.0};
        while (i < text.size() && text[i] != '+' && text[i] != '-') {
            if (text[i] == '*') {
                ++i;
                continue;
            }
            const auto j = static_cast<std::size_t>(text[i] - '0');
            const auto k = static_cast<std::size_t>(text[i + 1] - '0');
            term *= s(j, k);
            i += 2;
        }
        total += term;
    }
    return total;
}

constexpr std::string_view kI1 = "+00*11-01*10+02*13-03*12+20*31-21*30+22*33-23*32";
constexpr std::string_view kI2 = "+13*20-10*23+11*22-12*21+02*31-01*32+00*33-03*30";
constexpr std::string_view kI2A = "+00*13-03*10+02*11-01*12+22*31-21*32+20*33-23*30";
constexpr std::string_view kI2B = "+11*20-10*21+13*22-12*23+00*31-01*30+02*33-03*32";

double rel(Complex a, Complex b, double floor) { return std::abs(a - b) / std::max(std::abs(b), floor); }

}  // namespace

TEST_CASE("printed expansions against an independent evaluation") {
    auto rng = harness::make_rng(31, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = harness::random_state(rng);
        CHECK(std::abs(i1(s) - eval_expansion(s, kI1)) <= 1e-14);
        CHECK(std::abs(i2(s) - eval_expansion(s, kI2)) <= 1e-14);
        CHECK(std::abs(i2a(s) - eval_expansion(s, kI2A)) <= 1e-14);
        CHECK(std::abs(i2b(s) - eval_expansion(s, kI2B)) <= 1e-14);
        CHECK(std::abs(i3(s) - test::to_eigen(s.coeffs).determinant()) <= 1e-13);
    }
}

TEST_CASE("trace forms and block determinants agree with the expansions") {
    auto rng = harness::make_rng(32, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = harness::random_state(rng);
        const auto r = all_invariants(s);
        const auto t = trace_form::all(s);
        CHECK(std::abs(t.i1 - r.i1) <= 1e-13);
        CHECK(std::abs(t.i2 - r.i2) <= 1e-13);
        CHECK(std::abs(t.i2a - r.i2a) <= 1e-13);
        CHECK(std::abs(t.i2b - r.i2b) <= 1e-13);
        CHECK(std::abs(trace_form::i3_via_c(s) - r.i3) <= 1e-13);
        CHECK(std::abs(trace_form::i3_via_c_gamma5(s) - r.i3) <= 1e-13);
        CHECK(std::abs(i1_from_blocks(s) - r.i1) <= 1e-13);
        const auto d = block_determinants(s);
        CHECK(std::abs(d[0] - minor2(s, 0, 1, 0, 1)) == 0.0);
        CHECK(std::abs(d[1] - minor2(s, 0, 1, 2, 3)) == 0.0);
        CHECK(std::abs(d[2] - minor2(s, 2, 3, 0, 1)) == 0.0);
        CHECK(std::abs(d[3] - minor2(s, 2, 3, 2, 3)) == 0.0);
    }
}

TEST_CASE("catalog values") {
    const auto epr = all_invariants(catalog("epr").state);
    CHECK(std::abs(epr.i1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(epr.i1 - Complex(0, 0.5)) <= 1e-15);
    for (Complex z : {epr.i2, epr.i2a, epr.i2b, epr.i3}) CHECK(std::abs(z) <= 1e-15);

    const auto i2m = all_invariants(catalog("i2_max").state);
    CHECK(std::abs(i2m.i2) == doctest::Approx(0.5));
    const auto i2am = all_invariants(catalog("i2a_max").state);
    CHECK(std::abs(i2am.i2a) == doctest::Approx(0.5));
    const auto i2bm = all_invariants(catalog("i2b_max").state);
    CHECK(std::abs(i2bm.i2b) == doctest::Approx(0.5));

    const auto i3m = all_invariants(catalog("i3_max").state);
    CHECK(std::abs(i3m.i3) == doctest::Approx(0.0625));
    for (Complex z : {i3m.i1, i3m.i2, i3m.i2a, i3m.i2b}) CHECK(std::abs(z) <= 1e-15);

    const auto ch = all_invariants(catalog("chiral_epr").state);
    for (Complex z : {ch.i1, ch.i2, ch.i2a, ch.i2b}) CHECK(std::abs(z) == doctest::Approx(0.5));
    CHECK(std::abs(ch.i3) <= 1e-15);

    const auto ds = all_invariants(catalog("decay_symmetric").state);
    CHECK(std::abs(ds.i1) == doctest::Approx(0.5));
    CHECK(std::abs(ds.i2) == doctest::Approx(0.5));
    CHECK(std::abs(ds.i3) == doctest::Approx(0.0625));
    CHECK(std::abs(ds.i2a) <= 1e-15);
    CHECK(std::abs(ds.i2b) <= 1e-15);

    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        CHECK(bound_violations(all_invariants(catalog(name).state)).empty());
    }
}

TEST_CASE("bound violations are reported, not clipped") {
    InvariantRecord r;
    r.i1 = 0.7;
    r.i3 = Complex(0, 0.1);
    const auto v = bound_violations(r);
    CHECK(v.size() == 2);
}

TEST_CASE("homogeneity") {
    auto rng = harness::make_rng(33, 0);
    const auto s = harness::random_state(rng);
    const Complex c{0.7, -1.3};
    TwoSpinorState scaled{c * s.coeffs};
    const auto r = all_invariants(s);
    const auto q = all_invariants(scaled);
    CHECK(rel(q.i1, c * c * r.i1, 1e-3) <= 1e-13);
    CHECK(rel(q.i2a, c * c * r.i2a, 1e-3) <= 1e-13);
    CHECK(rel(q.i3, c * c * c * c * r.i3, 1e-4) <= 1e-13);
}

TEST_CASE("local Lorentz and SL(4) invariance") {
    auto rng = harness::make_rng(34, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = harness::random_state(rng);
        const auto sa = spinor_rep(harness::random_params(rng));
        const auto sb = spinor_rep(harness::random_params(rng));
        const auto r = all_invariants(s);
        const auto q = all_invariants(apply_local(s, sa, sb));
        for (auto id : kAllInvariants) CHECK(rel(q[id], r[id], id == InvariantId::I3 ? 1e-4 : 1e-3) <= 1e-10);

        const auto ga = harness::random_sl4(rng);
        const auto gb = harness::random_sl4(rng);
        CHECK(std::abs(determinant(ga) - 1.0) <= 1e-12);
        CHECK(rel(i3(apply_local(s, ga, gb)), r.i3, 1e-4) <= 1e-10);
    }
}

TEST_CASE("parity and CPT sign table") {
    auto rng = harness::make_rng(35, 0);
    const auto s = harness::random_state(rng);
    const auto r = all_invariants(s);
    const auto id = ComplexMatrix4::identity();
    const auto pa = all_invariants(apply_local(s, gamma(0), id));
    CHECK(std::abs(pa.i1 - r.i1) <= 1e-14);
    CHECK(std::abs(pa.i2a - r.i2a) <= 1e-14);
    CHECK(std::abs(pa.i2 + r.i2) <= 1e-14);
    CHECK(std::abs(pa.i2b + r.i2b) <= 1e-14);
    const auto pb = all_invariants(apply_local(s, id, gamma(0)));
    CHECK(std::abs(pb.i1 - r.i1) <= 1e-14);
    CHECK(std::abs(pb.i2b - r.i2b) <= 1e-14);
    CHECK(std::abs(pb.i2 + r.i2) <= 1e-14);
    CHECK(std::abs(pb.i2a + r.i2a) <= 1e-14);

    const auto cpt = Complex(0, -1) * gamma5();
    const auto c = all_invariants(apply_local(s, cpt, id));
    CHECK(std::abs(c.i1 + r.i1) <= 1e-14);
    CHECK(std::abs(c.i2 + r.i2) <= 1e-14);
    CHECK(std::abs(c.i2a + r.i2a) <= 1e-14);
    CHECK(std::abs(c.i2b + r.i2b) <= 1e-14);
    CHECK(std::abs(c.i3 - r.i3) <= 1e-14);
}

TEST_CASE("degree-4 products") {
    const auto epr = degree4_products(all_invariants(catalog("epr").state));
    REQUIRE(epr.size() == 10);
    for (const auto& p : epr) {
        CAPTURE(p.label);
        if (p.label == "I1^2") {
            CHECK(std::abs(p.value - Complex(-0.25)) <= 1e-15);
        } else {
            CHECK(std::abs(p.value) <= 1e-15);
        }
    }
    for (const auto& p : degree4_products(InvariantRecord{})) CHECK(p.value == Complex(0.0));

    bool found = false;
    for (const auto& p : epr) {
        if (p.label == "I1*I2A") {
            found = true;
            CHECK(describe(p.parity) == "P invariant in Alice's lab only");
        }
        if (p.label == "I2*I2B") CHECK(p.parity == ParityClass::AliceOnly);
        if (p.label == "I1*I2B") CHECK(p.parity == ParityClass::BobOnly);
        if (p.label == "I1*I2") CHECK(p.parity == ParityClass::Neither);
        if (p.label == "I2^2") CHECK(p.parity == ParityClass::BothLabs);
    }
    CHECK(found);
}

TEST_CASE("Weyl reduction to the concurrence") {
    auto epr = catalog("epr").state;
    auto both = weyl_project(weyl_project(epr, Side::Alice, Hand::Right), Side::Bob, Hand::Right).normalized();
    const Complex w = wootters_weyl(both);
    CHECK(std::abs(i1(both)) == doctest::Approx(4 * std::abs(w)));

    Spinor a;
    a.amps = {{1.0, 0.5, 1.0, 0.5}};
    const auto prod = product_state(a, a).normalized();
    CHECK(std::abs(wootters_weyl(prod)) <= 1e-15);

    auto rng = harness::make_rng(36, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Hand ha = trial % 2 ? Hand::Left : Hand::Right;
        const Hand hb = trial % 3 ? Hand::Left : Hand::Right;
        const auto s = harness::random_weyl_state(rng, ha, hb);
        CHECK(weyl_hand(s, Side::Alice) == ha);
        CHECK(weyl_hand(s, Side::Bob) == hb);
        const Complex c4 = 4.0 * wootters_weyl(s);
        for (Complex z : {i1(s), i2(s), i2a(s), i2b(s)}) CHECK(std::min(std::abs(z - c4), std::abs(z + c4)) <= 1e-12);
        CHECK(std::abs(i3(s)) <= 1e-14);
    }

    CHECK_THROWS_AS((void)wootters_weyl(catalog("i3_max").state), std::invalid_argument);
    CHECK_FALSE(weyl_hand(catalog("i3_max").state, Side::Alice).has_value());
}

TEST_CASE("custom kernels change the trace forms only") {
    auto rng = harness::make_rng(37, 0);
    const auto s = harness::random_state(rng);
    KernelSet k = KernelSet::standard();
    CHECK(k.c == conjugation_C());
    CHECK(k.c_gamma5 == conjugation_C_gamma5());
    k.c(0, 1) += 0.1;
    CHECK(std::abs(trace_form::i1(s, k) - i1(s)) > 1e-6);
}
