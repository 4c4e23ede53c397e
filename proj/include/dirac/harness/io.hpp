// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Text formats for states, Hamiltonian specs and sweep scenarios.
//
// All documents are JSON.  Doubles are written with 17 significant digits so
// that load(save(x)) == x bit for bit.
//
// State:     {"name": "...", "coeffs": [[re, im] x 16]}   (row-major j*4+k)
// Spec:      {"mass", "charge", "momentum": [3], "potential": [4],
//             "extras": [{"kind": "...", ...}], "fw_fields": {...}}
// Scenario:  {"initial_state", "schedule_a", "schedule_b", "grid",
//             "steps", "outputs"}

#pragma once

#include "dirac/evolution.hpp"
#include "dirac/foldy_wouthuysen.hpp"
#include "dirac/invariant_record.hpp"
#include "dirac/states.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac::io {

using Json = nlohmann::ordered_json;

/// Malformed input.  what() starts with the JSON path of the offending field.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& path, const std::string& message);
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Serializes with %.17g for every double.
[[nodiscard]] std::string dump(const Json& doc, int indent = 2);

/// printf %.17g; round-trips every finite double.
[[nodiscard]] std::string format_double(double x);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct NamedState {
    std::string name;
    TwoSpinorState state;
};

[[nodiscard]] Json state_to_json(const TwoSpinorState& state, const std::string& name = "");
[[nodiscard]] NamedState state_from_json(const Json& doc, const std::string& path = "$");
[[nodiscard]] NamedState load_state(const std::filesystem::path& file);
void save_state(const std::filesystem::path& file, const TwoSpinorState& state, const std::string& name = "");

struct HamiltonianFile {
    HamiltonianSpec spec;
    FWFieldData fw_fields;
};

[[nodiscard]] Json spec_to_json(const HamiltonianSpec& spec);
[[nodiscard]] Json spec_to_json(const HamiltonianFile& file);
[[nodiscard]] HamiltonianFile spec_from_json(const Json& doc, const std::string& path = "$");
[[nodiscard]] HamiltonianFile load_spec(const std::filesystem::path& file);
void save_spec(const std::filesystem::path& file, const HamiltonianFile& spec);

[[nodiscard]] Json record_to_json(const InvariantRecord& r);

enum class Output { I1, I2, I2A, I2B, I3, BlockConcurrences };

struct Grid {
    double t_max_a = 0.0;
    double t_max_b = 0.0;
    int samples = 2;
};

struct Scenario {
    NamedState initial_state;
    Schedule schedule_a;
    Schedule schedule_b;
    Grid grid;
    int steps = 1;
    std::vector<Output> outputs;
};

/// Relative "file" references are resolved against base_dir.
[[nodiscard]] Scenario scenario_from_json(const Json& doc, const std::filesystem::path& base_dir,
                                          const std::string& path = "$");
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& file);

}  // namespace dirac::io
