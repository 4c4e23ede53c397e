// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Invariants sampled on a (t_A, t_B) grid.
//
// Columns are t_a, t_b, then for every requested invariant X the triple
// X_re, X_im, X_abs.  block_concurrences adds c00, c01, c10, c11, where
// c_ab = 2 |det| of the 2x2 block (a, b) of the coefficient matrix.
// Rows run over t_a (outer) and t_b (inner).

#pragma once

#include "dirac/harness/io.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dirac::harness {

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws std::out_of_range if absent.
    [[nodiscard]] std::size_t column_index(std::string_view name) const;
    [[nodiscard]] std::vector<double> column(std::string_view name) const;
};

/// Sample times along one axis: a single t = 0 sample when t_max == 0.
[[nodiscard]] std::vector<double> axis_times(double t_max, int samples);

[[nodiscard]] SweepTable sweep(const io::Scenario& scenario);

/// Header line plus one line per row, numbers printed with %.17g.
[[nodiscard]] std::string to_csv(const SweepTable& table);

}  // namespace dirac::harness
