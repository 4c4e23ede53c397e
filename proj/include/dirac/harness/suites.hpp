// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Property suites over the library, with deterministic reports.
//
// Each property has a default threshold; a run uses min(default, tol) so a
// looser command-line tolerance never relaxes an exact identity.  Properties
// marked with the ">" comparison are existence claims (a counterexample to
// an invariance must be found) and keep their fixed threshold.

#pragma once

#include "dirac/harness/io.hpp"
#include "dirac/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dirac::harness {

enum class Comparison {
    AtMost,    ///< worst deviation <= threshold
    Exceeds,   ///< largest observed effect > threshold
};

struct PropertyResult {
    std::string suite;
    std::string name;
    Comparison comparison = Comparison::AtMost;
    double threshold = 0.0;
    double worst = 0.0;
    std::size_t cases = 0;
    bool passed = false;
    std::string counterexample;  ///< set on failure
};

struct PropertyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    double tolerance = 0.0;
    std::vector<PropertyResult> properties;

    [[nodiscard]] bool all_passed() const;
};

struct SuiteOptions {
    /// Replaces the kernels used by the trace-form checks (negative controls).
    std::optional<KernelSet> kernels;
};

/// algebra, lorentz, invariance, evolution, fw, all
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite (message lists the valid
/// names), trials < 1 or tol <= 0.
[[nodiscard]] PropertyReport run_suite(std::string_view name, std::uint64_t seed, int trials, double tol,
                                       const SuiteOptions& options = {});

[[nodiscard]] io::Json report_to_json(const PropertyReport& report);

}  // namespace dirac::harness
