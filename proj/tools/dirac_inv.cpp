// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// dirac-inv: command-line front end.
// Exit status: 0 success, 1 property failure, 2 usage or input error.

#include "dirac/evolution.hpp"
#include "dirac/foldy_wouthuysen.hpp"
#include "dirac/harness/io.hpp"
#include "dirac/harness/suites.hpp"
#include "dirac/harness/sweep.hpp"
#include "dirac/invariants.hpp"
#include "dirac/states.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using dirac::io::Json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

std::string invariants_csv(const dirac::InvariantRecord& r) {
    std::string header;
    std::string row;
    for (dirac::InvariantId id : dirac::kAllInvariants) {
        const std::string n(dirac::to_string(id));
        for (const char* part : {"_re", "_im", "_abs"}) header += (header.empty() ? "" : ",") + n + part;
        const dirac::Complex v = r[id];
        for (double x : {v.real(), v.imag(), std::abs(v)}) row += (row.empty() ? "" : ",") + dirac::io::format_double(x);
    }
    return header + "\n" + row + "\n";
}

Json degree4_json(const dirac::InvariantRecord& r) {
    Json out = Json::array();
    for (const auto& p : dirac::degree4_products(r)) {
        Json j = Json::object();
        j["product"] = p.label;
        j["re"] = p.value.real();
        j["im"] = p.value.imag();
        j["classification"] = std::string(dirac::describe(p.parity));
        out.push_back(std::move(j));
    }
    return out;
}

Json invariants_document(const dirac::io::NamedState& s) {
    Json doc = Json::object();
    if (!s.name.empty()) doc["name"] = s.name;
    const dirac::InvariantRecord r = dirac::all_invariants(s.state);
    doc["norm_squared"] = s.state.norm_squared();
    doc["invariants"] = dirac::io::record_to_json(r);
    doc["degree4"] = degree4_json(r);
    Json bounds = Json::array();
    if (s.state.is_normalized(1e-9)) {
        for (const auto& b : dirac::bound_violations(r)) bounds.push_back(b);
    }
    doc["bound_violations"] = std::move(bounds);
    return doc;
}

int cmd_catalog_list() {
    for (const std::string& name : dirac::catalog_names()) {
        std::cout << name << "  " << dirac::catalog(name).description << '\n';
    }
    return kOk;
}

int cmd_catalog_show(const std::string& name) {
    const dirac::CatalogEntry e = dirac::catalog(name);
    Json doc = dirac::io::state_to_json(e.state, e.name);
    doc["description"] = e.description;
    doc["invariants"] = dirac::io::record_to_json(dirac::all_invariants(e.state));
    std::cout << dirac::io::dump(doc);
    return kOk;
}

int cmd_invariants(const std::string& file, const std::string& format) {
    const dirac::io::NamedState s = dirac::io::load_state(file);
    if (format == "csv") {
        std::cout << invariants_csv(dirac::all_invariants(s.state));
    } else {
        std::cout << dirac::io::dump(invariants_document(s));
    }
    return kOk;
}

int cmd_evolve(const std::string& state_file, const std::string& ham_a, const std::string& ham_b, double t_a,
               double t_b, int steps) {
    if (t_a < 0.0 || t_b < 0.0) throw CLI::ValidationError("--t-a/--t-b", "times must be >= 0");
    const dirac::io::NamedState s = dirac::io::load_state(state_file);
    const dirac::HamiltonianSpec a = dirac::io::load_spec(ham_a).spec;
    const dirac::HamiltonianSpec b = dirac::io::load_spec(ham_b).spec;
    const dirac::TwoSpinorState out =
        dirac::evolve_two_lab(s.state, dirac::Schedule::constant(a, t_a), dirac::Schedule::constant(b, t_b), steps);
    Json doc = dirac::io::state_to_json(out, s.name);
    doc["t_a"] = t_a;
    doc["t_b"] = t_b;
    doc["steps"] = steps;
    doc["invariants"] = dirac::io::record_to_json(dirac::all_invariants(out));
    doc["initial_invariants"] = dirac::io::record_to_json(dirac::all_invariants(s.state));
    std::cout << dirac::io::dump(doc);
    return kOk;
}

int cmd_sweep(const std::string& scenario, const std::string& out) {
    const dirac::io::Scenario sc = dirac::io::load_scenario(scenario);
    const dirac::harness::SweepTable table = dirac::harness::sweep(sc);
    dirac::io::write_text_file(out, dirac::harness::to_csv(table));
    std::cerr << "wrote " << table.rows.size() << " rows to " << out << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, double tol) {
    const dirac::harness::PropertyReport r = dirac::harness::run_suite(suite, seed, trials, tol);
    std::cout << dirac::io::dump(dirac::harness::report_to_json(r));
    return r.all_passed() ? kOk : kPropertyFailure;
}

int cmd_fw(const std::string& state_file, const std::string& ham_a, const std::string& ham_b, int order) {
    const dirac::io::NamedState s = dirac::io::load_state(state_file);
    const dirac::io::HamiltonianFile fa = dirac::io::load_spec(ham_a);
    const dirac::io::HamiltonianFile fb = dirac::io::load_spec(ham_b);
    const dirac::FWContext ca(fa.spec, fa.fw_fields);
    const dirac::FWContext cb(fb.spec, fb.fw_fields);
    const dirac::TwoSpinorState t = dirac::fw_transform_state(s.state, ca, cb, order, order);
    Json doc = dirac::io::state_to_json(t, s.name);
    doc["order"] = order;
    doc["fw_invariants"] = dirac::io::record_to_json(dirac::fw_invariants(t, ca, cb, order, order));
    doc["original_invariants"] = dirac::io::record_to_json(dirac::all_invariants(s.state));
    doc["uncompensated_invariants"] = dirac::io::record_to_json(dirac::all_invariants(t));
    std::cout << dirac::io::dump(doc);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz-invariant entanglement polynomials of two Dirac spinors", "dirac-inv"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "Example states");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "List catalog states");
    std::string show_name;
    auto* show = catalog->add_subcommand("show", "Print one catalog state");
    show->add_option("name", show_name, "Catalog name")->required();

    std::string state_file;
    std::string format = "json";
    auto* invariants = app.add_subcommand("invariants", "Evaluate the five invariants of a state file");
    invariants->add_option("--state", state_file, "State file")->required();
    invariants->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string ham_a;
    std::string ham_b;
    double t_a = 0.0;
    double t_b = 0.0;
    int steps = 1;
    auto* evolve = app.add_subcommand("evolve", "Evolve a state with constant local Hamiltonians");
    evolve->add_option("--state", state_file, "State file")->required();
    evolve->add_option("--ham-a", ham_a, "Alice's Hamiltonian spec")->required();
    evolve->add_option("--ham-b", ham_b, "Bob's Hamiltonian spec")->required();
    evolve->add_option("--t-a", t_a, "Alice's time")->required();
    evolve->add_option("--t-b", t_b, "Bob's time")->required();
    evolve->add_option("--steps", steps, "Steps per segment")->required()->check(CLI::PositiveNumber);

    std::string scenario;
    std::string out;
    auto* sweep = app.add_subcommand("sweep", "Sample invariants over a (t_A, t_B) grid");
    sweep->add_option("--scenario", scenario, "Scenario file")->required();
    sweep->add_option("--out", out, "Output CSV")->required();

    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    double tol = 0.0;
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "algebra, lorentz, invariance, evolution, fw or all")->required();
    verify->add_option("--seed", seed, "Random seed")->required();
    verify->add_option("--trials", trials, "Random trials per property")->required()->check(CLI::PositiveNumber);
    verify->add_option("--tol", tol, "Tolerance cap")->required()->check(CLI::PositiveNumber);

    int order = 2;
    auto* fw = app.add_subcommand("fw", "Foldy-Wouthuysen picture of a state");
    fw->add_option("--state", state_file, "State file")->required();
    fw->add_option("--ham-a", ham_a, "Alice's Hamiltonian spec (with fw_fields)")->required();
    fw->add_option("--ham-b", ham_b, "Bob's Hamiltonian spec (with fw_fields)")->required();
    fw->add_option("--order", order, "0, 1 or 2")->required()->check(CLI::Range(0, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (catalog->parsed()) {
            if (show->parsed()) return cmd_catalog_show(show_name);
            return cmd_catalog_list();
        }
        if (invariants->parsed()) return cmd_invariants(state_file, format);
        if (evolve->parsed()) return cmd_evolve(state_file, ham_a, ham_b, t_a, t_b, steps);
        if (sweep->parsed()) return cmd_sweep(scenario, out);
        if (verify->parsed()) return cmd_verify(suite, seed, trials, tol);
        if (fw->parsed()) return cmd_fw(state_file, ham_a, ham_b, order);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
