// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/sweep.hpp"

#include "dirac/invariants.hpp"

#include <stdexcept>

namespace dirac::harness {

std::size_t SweepTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw std::out_of_range("SweepTable: no column '" + std::string(name) + "'");
}

std::vector<double> SweepTable::column(std::string_view name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
}

std::vector<double> axis_times(double t_max, int samples) {
    if (samples < 2) throw std::invalid_argument("axis_times: samples must be >= 2");
    if (t_max == 0.0) return {0.0};
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) t[i] = t_max * i / (samples - 1);
    return t;
}

namespace {

const char* output_name(io::Output o) {
    switch (o) {
        case io::Output::I1: return "i1";
        case io::Output::I2: return "i2";
        case io::Output::I2A: return "i2a";
        case io::Output::I2B: return "i2b";
        case io::Output::I3: return "i3";
        case io::Output::BlockConcurrences: return "block_concurrences";
    }
    return "?";
}

void push_complex(std::vector<double>& row, Complex v) {
    row.push_back(v.real());
    row.push_back(v.imag());
    row.push_back(std::abs(v));
}

}  // namespace

SweepTable sweep(const io::Scenario& sc) {
    SweepTable table;
    table.columns = {"t_a", "t_b"};
    for (io::Output o : sc.outputs) {
        if (o == io::Output::BlockConcurrences) {
            for (const char* c : {"c00", "c01", "c10", "c11"}) table.columns.emplace_back(c);
        } else {
            for (const char* part : {"_re", "_im", "_abs"}) table.columns.push_back(output_name(o) + std::string(part));
        }
    }

    const std::vector<double> ta = axis_times(sc.grid.t_max_a, sc.grid.samples);
    const std::vector<double> tb = axis_times(sc.grid.t_max_b, sc.grid.samples);
    std::vector<ComplexMatrix4> ua;
    std::vector<ComplexMatrix4> ub;
    for (double t : ta) ua.push_back(evolve_until(sc.schedule_a, t, sc.steps));
    for (double t : tb) ub.push_back(evolve_until(sc.schedule_b, t, sc.steps));

    for (std::size_t i = 0; i < ta.size(); ++i) {
        for (std::size_t j = 0; j < tb.size(); ++j) {
            const TwoSpinorState s = apply_local(sc.initial_state.state, ua[i], ub[j]);
            std::vector<double> row{ta[i], tb[j]};
            for (io::Output o : sc.outputs) {
                switch (o) {
                    case io::Output::I1: push_complex(row, i1(s)); break;
                    case io::Output::I2: push_complex(row, i2(s)); break;
                    case io::Output::I2A: push_complex(row, i2a(s)); break;
                    case io::Output::I2B: push_complex(row, i2b(s)); break;
                    case io::Output::I3: push_complex(row, i3(s)); break;
                    case io::Output::BlockConcurrences:
                        for (const Complex& d : block_determinants(s)) row.push_back(2.0 * std::abs(d));
                        break;
                }
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += io::format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace dirac::harness
