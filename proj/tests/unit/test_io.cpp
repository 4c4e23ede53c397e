// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/io.hpp"
#include "dirac/harness/random.hpp"
#include "dirac/states.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

using namespace dirac;
namespace fs = std::filesystem;

namespace {

const fs::path kData{DIRAC_TEST_DATA_DIR};

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "dirac_io_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string error_of(const auto& fn) {
    try {
        fn();
    } catch (const io::FormatError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("doubles carry 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK_THROWS((void)io::format_double(std::numeric_limits<double>::infinity()));
}

TEST_CASE("state round trip") {
    const auto epr = catalog("epr");
    const auto file = scratch("epr.json");
    io::save_state(file, epr.state, "epr");
    const auto back = io::load_state(file);
    CHECK(back.name == "epr");
    CHECK(back.state.coeffs == epr.state.coeffs);

    auto rng = harness::make_rng(61, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = harness::random_state(rng);
        const auto j = io::state_to_json(s);
        const auto parsed = io::state_from_json(io::Json::parse(io::dump(j)));
        CHECK(parsed.state.coeffs == s.coeffs);
        CHECK(io::state_from_json(io::Json::parse(io::dump(j, -1))).state.coeffs == s.coeffs);
    }

    CHECK(io::load_state(kData / "epr.json").state.coeffs == epr.state.coeffs);
}

TEST_CASE("malformed state documents name the field") {
    const auto missing = error_of([] { (void)io::load_state(kData / "missing_coeffs.json"); });
    CHECK(missing.find("coeffs") != std::string::npos);
    CHECK(missing.find("missing") != std::string::npos);

    const auto short_msg = error_of([] { (void)io::load_state(kData / "short_coeffs.json"); });
    CHECK(short_msg.find("coeffs") != std::string::npos);
    CHECK(short_msg.find("16") != std::string::npos);
    CHECK(short_msg.find("15") != std::string::npos);

    auto doc = io::state_to_json(catalog("epr").state);
    doc["coeffs"][3] = io::Json::array({1.0});
    const auto pair_msg = error_of([&] { (void)io::state_from_json(doc); });
    CHECK(pair_msg.find("$.coeffs[3]") != std::string::npos);

    const auto nofile = error_of([] { (void)io::load_state(kData / "does_not_exist.json"); });
    CHECK(nofile.find("cannot open") != std::string::npos);

    const auto bad = scratch("bad.json");
    io::write_text_file(bad, "{ \"coeffs\": [");
    CHECK(error_of([&] { (void)io::load_state(bad); }).find("parse error") != std::string::npos);
}

TEST_CASE("spec round trip") {
    HamiltonianSpec s;
    s.mass = 0.7;
    s.charge = -1.0;
    s.momentum = {0.1, 0.2, 0.3};
    s.potential = {0.4, 0.5, 0.6, 0.7};
    PauliCoupling pc;
    pc.grad[0][1] = 0.25;
    s.extras = {YukawaScalar{0.1}, YukawaPseudoscalar{0.2}, pc, ChiralCoupling{{0.1, 0.2, 0.3, 0.4}, -1},
                SemenoffMass{0.3}, HaldaneMass{0.4}, Semimetal2D{1.5, 0.2}};
    io::HamiltonianFile hf{s, {}};
    hf.fw_fields.grad_A0 = {0.1, 0.2, 0.3};
    hf.fw_fields.grad_A[1][2] = 0.5;

    const auto file = scratch("spec.json");
    io::save_spec(file, hf);
    const auto back = io::load_spec(file);
    CHECK(io::dump(io::spec_to_json(back)) == io::dump(io::spec_to_json(hf)));
    CHECK(back.spec.extras.size() == 7);
    CHECK(std::get<ChiralCoupling>(back.spec.extras[3]).sign == -1);

    const auto minimal = io::load_spec(kData / "mass1.json");
    CHECK(minimal.spec.mass == 1.0);
    CHECK(minimal.spec.charge == 1.0);
    CHECK(minimal.spec.extras.empty());
}

TEST_CASE("malformed spec documents") {
    CHECK(error_of([] { (void)io::spec_from_json(io::Json::parse("{}")); }).find("$.mass") != std::string::npos);
    CHECK(error_of([] { (void)io::spec_from_json(io::Json::parse(R"({"mass": -1})")); }).find("mass") != std::string::npos);
    const auto kind = error_of([] { (void)io::spec_from_json(io::Json::parse(R"({"mass": 1, "extras": [{"kind": "x"}]})")); });
    CHECK(kind.find("$.extras[0].kind") != std::string::npos);
    const auto mom = error_of([] { (void)io::spec_from_json(io::Json::parse(R"({"mass": 1, "momentum": [1, 2]})")); });
    CHECK(mom.find("$.momentum") != std::string::npos);
}

TEST_CASE("scenarios") {
    const auto sc = io::load_scenario(kData / "scenario_epr.json");
    CHECK(sc.initial_state.name == "epr");
    CHECK(sc.grid.samples == 33);
    CHECK(sc.schedule_a.total_duration() == doctest::Approx(2 * 3.141592653589793));
    CHECK(sc.outputs.size() == 3);
    CHECK(sc.steps == 1);

    const auto mix = io::load_scenario(kData / "scenario_mix.json");
    CHECK(mix.initial_state.name == "mix");
    CHECK(mix.schedule_a.segments.size() == 1);
    CHECK(mix.schedule_a.segments[0].spec.mass == 1.3);

    const auto zero = io::load_scenario(kData / "scenario_zero.json");
    CHECK(zero.outputs.size() == 5);
    CHECK(zero.schedule_a.segments.empty());

    const auto short_msg = error_of([] { (void)io::load_scenario(kData / "scenario_short_schedule.json"); });
    CHECK(short_msg.find("schedule_a") != std::string::npos);

    const auto unknown = error_of([] {
        (void)io::scenario_from_json(io::Json::parse(R"({"initial_state": "nope", "schedule_a": [], "schedule_b": [],
            "grid": {"t_max_a": 0, "t_max_b": 0, "samples": 2}})"), kData);
    });
    CHECK(unknown.find("$.initial_state") != std::string::npos);

    const auto samples = error_of([] {
        (void)io::scenario_from_json(io::Json::parse(R"({"initial_state": "epr", "schedule_a": [], "schedule_b": [],
            "grid": {"t_max_a": 0, "t_max_b": 0, "samples": 1}})"), kData);
    });
    CHECK(samples.find("$.grid.samples") != std::string::npos);
}

TEST_CASE("record serialization") {
    const auto j = io::record_to_json(InvariantRecord{Complex(0, 0.5), {}, {}, {}, Complex(0.0625)});
    CHECK(j["i1"]["im"].get<double>() == 0.5);
    CHECK(j["i1"]["abs"].get<double>() == 0.5);
    CHECK(j["i3"]["re"].get<double>() == 0.0625);
}
