// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/sweep.hpp"
#include "dirac/harness/period.hpp"
#include "dirac/invariants.hpp"
#include "dirac/evolution.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <stdexcept>

using namespace dirac;
using std::numbers::pi;

namespace {
const std::filesystem::path kData{DIRAC_TEST_DATA_DIR};
}

TEST_CASE("axis times") {
    CHECK(harness::axis_times(0.0, 5) == std::vector<double>{0.0});
    const auto t = harness::axis_times(2.0, 5);
    REQUIRE(t.size() == 5);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 2.0);
    CHECK(t[2] == 1.0);
    CHECK_THROWS_AS((void)harness::axis_times(1.0, 1), std::invalid_argument);
}

TEST_CASE("epr with equal masses keeps |i1| at one half") {
    const auto sc = io::load_scenario(kData / "scenario_epr.json");
    const auto table = harness::sweep(sc);
    CHECK(table.rows.size() == 33u * 33u);
    CHECK(table.columns.front() == "t_a");
    CHECK(table.columns.size() == 2 + 3 + 3 + 4);
    for (double v : table.column("i1_abs")) CHECK(std::abs(v - 0.5) <= 1e-12);
    for (double v : table.column("i2_abs")) CHECK(v <= 1e-12);

    // closed-form oracle, pointwise
    const auto ta = table.column("t_a");
    const auto tb = table.column("t_b");
    const auto re = table.column("i1_re");
    const auto im = table.column("i1_im");
    for (std::size_t r = 0; r < table.rows.size(); r += 17) {
        const Complex z = i1_closed_form(sc.initial_state.state, 1.0, 1.0, ta[r], tb[r]);
        CHECK(std::abs(z - Complex(re[r], im[r])) <= 1e-12);
    }
    const auto c00 = table.column("c00");
    for (double v : c00) CHECK(v == doctest::Approx(1.0));
    for (double v : table.column("c11")) CHECK(v <= 1e-12);
}

TEST_CASE("period of a generic state along Alice's axis") {
    const auto sc = io::load_scenario(kData / "scenario_mix.json");
    const auto table = harness::sweep(sc);
    REQUIRE(table.rows.size() == 512);
    const auto y = table.column("i1_re");
    const auto t = table.column("t_a");
    const auto fit = harness::fit_period(y, t[1] - t[0]);
    REQUIRE(fit.status == harness::PeriodStatus::Periodic);
    const double expected = pi / 1.3;
    CHECK(std::abs(fit.period - expected) / expected <= 1e-6);
}

TEST_CASE("zero-duration grid gives one row") {
    const auto sc = io::load_scenario(kData / "scenario_zero.json");
    const auto table = harness::sweep(sc);
    REQUIRE(table.rows.size() == 1);
    const auto r = all_invariants(sc.initial_state.state);
    CHECK(table.column("i1_re")[0] == r.i1.real());
    CHECK(table.column("i2_abs")[0] == std::abs(r.i2));
    CHECK(table.column("i3_abs")[0] == std::abs(r.i3));
}

TEST_CASE("CSV output") {
    const auto sc = io::load_scenario(kData / "scenario_zero.json");
    const auto csv = harness::to_csv(harness::sweep(sc));
    std::istringstream in(csv);
    std::string header, row, extra;
    std::getline(in, header);
    std::getline(in, row);
    CHECK_FALSE(std::getline(in, extra));
    CHECK(header.rfind("t_a,t_b,i1_re,i1_im,i1_abs,", 0) == 0);
    CHECK(row.find("0.5") != std::string::npos);
    CHECK_THROWS_AS((void)harness::sweep(sc).column("nope"), std::out_of_range);
}
