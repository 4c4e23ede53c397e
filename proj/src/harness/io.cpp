// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac::io {

FormatError::FormatError(const std::string& path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(path) {}

std::string format_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("format_double: non-finite value");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void dump_string(std::string& out, const std::string& s) {
    // nlohmann handles escaping; reuse it for strings only.
    out += Json(s).dump();
}

void dump_value(std::string& out, const Json& v, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump_string(out, key);
                out += indent < 0 ? ":" : ": ";
                dump_value(out, item, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // Short arrays of scalars stay on one line.
            const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
            out += '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                dump_value(out, item, indent, depth + 1);
            }
            if (!flat) newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float: out += format_double(v.get<double>()); return;
        case Json::value_t::string: dump_string(out, v.get<std::string>()); return;
        default: out += v.dump(); return;
    }
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw FormatError(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(path + "." + key, "missing required field");
    return *it;
}

double number(const Json& v, const std::string& path) {
    if (!v.is_number()) throw FormatError(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw FormatError(path, "non-finite number");
    return x;
}

double number_or(const Json& obj, const std::string& key, const std::string& path, double fallback) {
    const auto it = obj.find(key);
    return it == obj.end() ? fallback : number(*it, path + "." + key);
}

template <std::size_t N>
std::array<double, N> number_array(const Json& v, const std::string& path) {
    if (!v.is_array()) throw FormatError(path, "expected an array");
    if (v.size() != N) {
        throw FormatError(path, "expected " + std::to_string(N) + " entries, got " + std::to_string(v.size()));
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(v[i], path + "[" + std::to_string(i) + "]");
    return out;
}

template <std::size_t N>
std::array<double, N> number_array_or(const Json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    return it == obj.end() ? std::array<double, N>{} : number_array<N>(*it, path + "." + key);
}

template <std::size_t R, std::size_t C>
std::array<std::array<double, C>, R> number_matrix(const Json& v, const std::string& path) {
    if (!v.is_array() || v.size() != R) throw FormatError(path, "expected " + std::to_string(R) + " rows");
    std::array<std::array<double, C>, R> out{};
    for (std::size_t r = 0; r < R; ++r) out[r] = number_array<C>(v[r], path + "[" + std::to_string(r) + "]");
    return out;
}

template <std::size_t N>
Json to_array(const std::array<double, N>& a) {
    Json out = Json::array();
    for (double x : a) out.push_back(x);
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& file) {
    const std::filesystem::path p(file);
    return p.is_absolute() ? p : base / p;
}

}  // namespace

std::string dump(const Json& doc, int indent) {
    std::string out;
    dump_value(out, doc, indent, 0);
    out += '\n';
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path.string(), "cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string(), std::string("parse error: ") + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path.string(), "cannot open file for writing");
    out << text;
    if (!out) throw FormatError(path.string(), "write failed");
}

// --- states ---------------------------------------------------------------

Json state_to_json(const TwoSpinorState& state, const std::string& name) {
    Json doc = Json::object();
    if (!name.empty()) doc["name"] = name;
    Json coeffs = Json::array();
    for (const Complex& c : state.coeffs.entries()) coeffs.push_back(Json::array({c.real(), c.imag()}));
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

NamedState state_from_json(const Json& doc, const std::string& path) {
    NamedState out;
    const Json& coeffs = field(doc, "coeffs", path);
    const std::string cpath = path + ".coeffs";
    if (!coeffs.is_array()) throw FormatError(cpath, "expected an array");
    if (coeffs.size() != 16) {
        throw FormatError(cpath, "expected 16 [re, im] entries, got " + std::to_string(coeffs.size()));
    }
    for (std::size_t i = 0; i < 16; ++i) {
        const auto pair = number_array<2>(coeffs[i], cpath + "[" + std::to_string(i) + "]");
        out.state.coeffs.entries()[i] = {pair[0], pair[1]};
    }
    if (const auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw FormatError(path + ".name", "expected a string");
        out.name = it->get<std::string>();
    }
    return out;
}

NamedState load_state(const std::filesystem::path& file) { return state_from_json(read_json_file(file), file.string()); }

void save_state(const std::filesystem::path& file, const TwoSpinorState& state, const std::string& name) {
    write_text_file(file, dump(state_to_json(state, name)));
}

// --- Hamiltonian specs ----------------------------------------------------

namespace {

Json extra_to_json(const ExtraTerm& term) {
    Json j = Json::object();
    j["kind"] = std::string(kind_name(term));
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, YukawaScalar> || std::is_same_v<T, YukawaPseudoscalar>) {
                j["g_phi"] = t.g_phi;
            } else if constexpr (std::is_same_v<T, PauliCoupling>) {
                Json rows = Json::array();
                for (const auto& row : t.grad) rows.push_back(to_array(row));
                j["grad"] = std::move(rows);
            } else if constexpr (std::is_same_v<T, ChiralCoupling>) {
                j["z"] = to_array(t.z);
                j["sign"] = t.sign;
            } else if constexpr (std::is_same_v<T, SemenoffMass> || std::is_same_v<T, HaldaneMass>) {
                j["mass"] = t.mass;
            } else if constexpr (std::is_same_v<T, Semimetal2D>) {
                j["v_dirac"] = t.v_dirac;
                j["mu_p"] = t.mu_p;
            } else {
                j["v_dirac"] = t.v_dirac;
            }
        },
        term);
    return j;
}

ExtraTerm extra_from_json(const Json& j, const std::string& path) {
    const Json& kind_field = field(j, "kind", path);
    if (!kind_field.is_string()) throw FormatError(path + ".kind", "expected a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "yukawa_scalar") return YukawaScalar{number(field(j, "g_phi", path), path + ".g_phi")};
    if (kind == "yukawa_pseudoscalar") return YukawaPseudoscalar{number(field(j, "g_phi", path), path + ".g_phi")};
    if (kind == "pauli_coupling") return PauliCoupling{number_matrix<4, 4>(field(j, "grad", path), path + ".grad")};
    if (kind == "chiral_coupling") {
        ChiralCoupling c{number_array<4>(field(j, "z", path), path + ".z"), 1};
        const double sign = number_or(j, "sign", path, 1.0);
        if (sign != 1.0 && sign != -1.0) throw FormatError(path + ".sign", "must be +1 or -1");
        c.sign = sign > 0 ? 1 : -1;
        return c;
    }
    if (kind == "semenoff") return SemenoffMass{number(field(j, "mass", path), path + ".mass")};
    if (kind == "haldane") return HaldaneMass{number(field(j, "mass", path), path + ".mass")};
    if (kind == "semimetal2d") {
        return Semimetal2D{number_or(j, "v_dirac", path, 1.0), number_or(j, "mu_p", path, 0.0)};
    }
    if (kind == "semimetal3d") return Semimetal3D{number_or(j, "v_dirac", path, 1.0)};
    throw FormatError(path + ".kind",
                      "unknown term '" + kind +
                          "' (expected yukawa_scalar, yukawa_pseudoscalar, pauli_coupling, chiral_coupling, "
                          "semenoff, haldane, semimetal2d, semimetal3d)");
}

}  // namespace

Json spec_to_json(const HamiltonianSpec& spec) {
    Json doc = Json::object();
    doc["mass"] = spec.mass;
    doc["charge"] = spec.charge;
    doc["momentum"] = to_array(spec.momentum);
    doc["potential"] = to_array(spec.potential);
    Json extras = Json::array();
    for (const ExtraTerm& t : spec.extras) extras.push_back(extra_to_json(t));
    doc["extras"] = std::move(extras);
    return doc;
}

Json spec_to_json(const HamiltonianFile& file) {
    Json doc = spec_to_json(file.spec);
    Json fw = Json::object();
    fw["grad_A0"] = to_array(file.fw_fields.grad_A0);
    fw["dt_A"] = to_array(file.fw_fields.dt_A);
    Json rows = Json::array();
    for (const auto& row : file.fw_fields.grad_A) rows.push_back(to_array(row));
    fw["grad_A"] = std::move(rows);
    doc["fw_fields"] = std::move(fw);
    return doc;
}

HamiltonianFile spec_from_json(const Json& doc, const std::string& path) {
    HamiltonianFile out;
    HamiltonianSpec& spec = out.spec;
    spec.mass = number(field(doc, "mass", path), path + ".mass");
    spec.charge = number_or(doc, "charge", path, 1.0);
    spec.momentum = number_array_or<3>(doc, "momentum", path);
    spec.potential = number_array_or<4>(doc, "potential", path);
    if (const auto it = doc.find("extras"); it != doc.end()) {
        if (!it->is_array()) throw FormatError(path + ".extras", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            spec.extras.push_back(extra_from_json((*it)[i], path + ".extras[" + std::to_string(i) + "]"));
        }
    }
    if (const auto it = doc.find("fw_fields"); it != doc.end()) {
        const std::string fpath = path + ".fw_fields";
        if (!it->is_object()) throw FormatError(fpath, "expected an object");
        out.fw_fields.grad_A0 = number_array_or<3>(*it, "grad_A0", fpath);
        out.fw_fields.dt_A = number_array_or<3>(*it, "dt_A", fpath);
        if (const auto g = it->find("grad_A"); g != it->end()) {
            out.fw_fields.grad_A = number_matrix<3, 3>(*g, fpath + ".grad_A");
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(path, e.what());
    }
    return out;
}

HamiltonianFile load_spec(const std::filesystem::path& file) { return spec_from_json(read_json_file(file), file.string()); }

void save_spec(const std::filesystem::path& file, const HamiltonianFile& spec) {
    write_text_file(file, dump(spec_to_json(spec)));
}

Json record_to_json(const InvariantRecord& r) {
    Json doc = Json::object();
    for (InvariantId id : kAllInvariants) {
        const Complex v = r[id];
        Json e = Json::object();
        e["re"] = v.real();
        e["im"] = v.imag();
        e["abs"] = std::abs(v);
        doc[std::string(to_string(id))] = std::move(e);
    }
    return doc;
}

// --- scenarios ------------------------------------------------------------

namespace {

NamedState initial_state_from_json(const Json& v, const std::filesystem::path& base, const std::string& path) {
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        try {
            const CatalogEntry e = catalog(name);
            return {e.name, e.state};
        } catch (const std::invalid_argument& e) {
            throw FormatError(path, e.what());
        }
    }
    if (v.is_object() && v.contains("file")) {
        const Json& f = v["file"];
        if (!f.is_string()) throw FormatError(path + ".file", "expected a string");
        return load_state(resolve(base, f.get<std::string>()));
    }
    if (v.is_object()) return state_from_json(v, path);
    throw FormatError(path, "expected a catalog name, {\"file\": ...} or {\"coeffs\": ...}");
}

HamiltonianSpec segment_spec(const Json& v, const std::filesystem::path& base, const std::string& path) {
    if (v.is_object() && v.contains("file") && !v.contains("mass")) {
        const Json& f = v["file"];
        if (!f.is_string()) throw FormatError(path + ".file", "expected a string");
        return load_spec(resolve(base, f.get<std::string>())).spec;
    }
    return spec_from_json(v, path).spec;
}

Schedule schedule_from_json(const Json& v, const std::filesystem::path& base, const std::string& path,
                            double t_max) {
    Schedule s;
    if (v.is_object()) {
        // {"hamiltonian": ...} is a constant schedule covering the whole grid axis.
        s.segments.push_back({t_max, segment_spec(field(v, "hamiltonian", path), base, path + ".hamiltonian")});
        return s;
    }
    if (!v.is_array()) throw FormatError(path, "expected a segment array or {\"hamiltonian\": ...}");
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string sp = path + "[" + std::to_string(i) + "]";
        const double duration = number(field(v[i], "duration", sp), sp + ".duration");
        if (duration < 0.0) throw FormatError(sp + ".duration", "must be >= 0");
        s.segments.push_back({duration, segment_spec(field(v[i], "hamiltonian", sp), base, sp + ".hamiltonian")});
    }
    if (s.total_duration() < t_max * (1.0 - 1e-12)) {
        throw FormatError(path, "schedule ends at t = " + format_double(s.total_duration()) +
                                    " before the grid maximum " + format_double(t_max));
    }
    return s;
}

Output output_from_json(const Json& v, const std::string& path) {
    if (!v.is_string()) throw FormatError(path, "expected a string");
    const std::string s = v.get<std::string>();
    if (s == "i1") return Output::I1;
    if (s == "i2") return Output::I2;
    if (s == "i2a") return Output::I2A;
    if (s == "i2b") return Output::I2B;
    if (s == "i3") return Output::I3;
    if (s == "block_concurrences") return Output::BlockConcurrences;
    throw FormatError(path, "unknown output '" + s + "' (expected i1, i2, i2a, i2b, i3, block_concurrences)");
}

}  // namespace

Scenario scenario_from_json(const Json& doc, const std::filesystem::path& base_dir, const std::string& path) {
    Scenario sc;
    const Json& grid = field(doc, "grid", path);
    const std::string gpath = path + ".grid";
    sc.grid.t_max_a = number(field(grid, "t_max_a", gpath), gpath + ".t_max_a");
    sc.grid.t_max_b = number(field(grid, "t_max_b", gpath), gpath + ".t_max_b");
    const double samples = number(field(grid, "samples", gpath), gpath + ".samples");
    if (sc.grid.t_max_a < 0.0) throw FormatError(gpath + ".t_max_a", "must be >= 0");
    if (sc.grid.t_max_b < 0.0) throw FormatError(gpath + ".t_max_b", "must be >= 0");
    if (samples < 2 || samples != std::floor(samples) || samples > 1e6) {
        throw FormatError(gpath + ".samples", "must be an integer >= 2");
    }
    sc.grid.samples = static_cast<int>(samples);

    sc.initial_state = initial_state_from_json(field(doc, "initial_state", path), base_dir, path + ".initial_state");
    sc.schedule_a = schedule_from_json(field(doc, "schedule_a", path), base_dir, path + ".schedule_a", sc.grid.t_max_a);
    sc.schedule_b = schedule_from_json(field(doc, "schedule_b", path), base_dir, path + ".schedule_b", sc.grid.t_max_b);

    const double steps = number_or(doc, "steps", path, 1.0);
    if (steps < 1 || steps != std::floor(steps) || steps > 1e6) throw FormatError(path + ".steps", "must be an integer >= 1");
    sc.steps = static_cast<int>(steps);

    if (const auto it = doc.find("outputs"); it != doc.end()) {
        if (!it->is_array() || it->empty()) throw FormatError(path + ".outputs", "expected a non-empty array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            sc.outputs.push_back(output_from_json((*it)[i], path + ".outputs[" + std::to_string(i) + "]"));
        }
    } else {
        sc.outputs = {Output::I1, Output::I2, Output::I2A, Output::I2B, Output::I3};
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& file) {
    return scenario_from_json(read_json_file(file), file.parent_path(), file.string());
}

}  // namespace dirac::io
