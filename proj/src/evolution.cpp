// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/evolution.hpp"

#include "dirac/algebra.hpp"
#include "dirac/invariants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(double x) { return std::isfinite(x); }

template <std::size_t N>
bool finite(const std::array<double, N>& a) {
    for (double x : a) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument("HamiltonianSpec: " + what); }

bool is_semimetal(const ExtraTerm& t) {
    return std::holds_alternative<Semimetal2D>(t) || std::holds_alternative<Semimetal3D>(t);
}

// gamma^0 gamma^mu for mu = 1..3, cached once.
const std::array<ComplexMatrix4, 4>& alpha() {
    static const std::array<ComplexMatrix4, 4> a = [] {
        std::array<ComplexMatrix4, 4> out{};
        for (int mu = 0; mu < 4; ++mu) out[mu] = gamma(0) * gamma(mu);
        return out;
    }();
    return a;
}

ComplexMatrix4 kinetic(const HamiltonianSpec& spec, int max_mu, double factor) {
    ComplexMatrix4 h;
    for (int mu = 1; mu <= max_mu; ++mu) {
        const double p = spec.momentum[mu - 1] + spec.charge * spec.potential[mu];
        h += Complex{factor * p} * alpha()[mu];
    }
    return h;
}

}  // namespace

std::string_view kind_name(const ExtraTerm& term) {
    return std::visit(Overloaded{
                          [](const YukawaScalar&) { return std::string_view{"yukawa_scalar"}; },
                          [](const YukawaPseudoscalar&) { return std::string_view{"yukawa_pseudoscalar"}; },
                          [](const PauliCoupling&) { return std::string_view{"pauli_coupling"}; },
                          [](const ChiralCoupling&) { return std::string_view{"chiral_coupling"}; },
                          [](const SemenoffMass&) { return std::string_view{"semenoff"}; },
                          [](const HaldaneMass&) { return std::string_view{"haldane"}; },
                          [](const Semimetal2D&) { return std::string_view{"semimetal2d"}; },
                          [](const Semimetal3D&) { return std::string_view{"semimetal3d"}; },
                      },
                      term);
}

void HamiltonianSpec::validate() const {
    if (!finite(mass) || !finite(charge) || !finite(momentum) || !finite(potential)) reject("non-finite field");
    if (mass < 0.0) reject("mass must be >= 0");
    int semimetals = 0;
    for (const ExtraTerm& t : extras) {
        if (is_semimetal(t)) ++semimetals;
        std::visit(Overloaded{
                       [](const YukawaScalar& y) {
                           if (!finite(y.g_phi)) reject("non-finite yukawa_scalar");
                       },
                       [](const YukawaPseudoscalar& y) {
                           if (!finite(y.g_phi)) reject("non-finite yukawa_pseudoscalar");
                       },
                       [](const PauliCoupling& p) {
                           for (int mu = 0; mu < 4; ++mu) {
                               if (!finite(p.grad[mu])) reject("non-finite pauli_coupling");
                               if (p.grad[mu][mu] != 0.0) reject("pauli_coupling diagonal must be zero");
                           }
                       },
                       [](const ChiralCoupling& c) {
                           if (!finite(c.z)) reject("non-finite chiral_coupling");
                           if (c.sign != 1 && c.sign != -1) reject("chiral_coupling sign must be +1 or -1");
                       },
                       [](const SemenoffMass& s) {
                           if (!finite(s.mass)) reject("non-finite semenoff");
                       },
                       [](const HaldaneMass& h) {
                           if (!finite(h.mass)) reject("non-finite haldane");
                       },
                       [](const Semimetal2D& s) {
                           if (!finite(s.v_dirac) || !finite(s.mu_p)) reject("non-finite semimetal2d");
                       },
                       [](const Semimetal3D& s) {
                           if (!finite(s.v_dirac)) reject("non-finite semimetal3d");
                       },
                   },
                   t);
    }
    if (semimetals > 1) reject("at most one semimetal term");
}

ComplexMatrix4 build_hamiltonian(const HamiltonianSpec& spec) {
    spec.validate();
    const ComplexMatrix4 id = ComplexMatrix4::identity();
    const ComplexMatrix4 g0 = gamma(0);
    const ComplexMatrix4 g5 = gamma5();

    bool replaced = false;
    for (const ExtraTerm& t : spec.extras) replaced = replaced || is_semimetal(t);

    ComplexMatrix4 h = Complex{spec.charge * spec.potential[0]} * id + Complex{spec.mass} * g0;
    if (!replaced) h += kinetic(spec, 3, 1.0);

    for (const ExtraTerm& term : spec.extras) {
        std::visit(Overloaded{
                       [&](const YukawaScalar& y) { h += Complex{y.g_phi} * g0; },
                       [&](const YukawaPseudoscalar& y) { h += (kI * y.g_phi) * (g0 * g5); },
                       [&](const PauliCoupling& p) {
                           for (int nu = 0; nu < 4; ++nu) {
                               for (int mu = 0; mu < 4; ++mu) {
                                   if (mu == nu || p.grad[nu][mu] == 0.0) continue;
                                   h += (kI * p.grad[nu][mu]) * (alpha()[mu] * gamma(nu));
                               }
                           }
                       },
                       [&](const ChiralCoupling& c) {
                           const ComplexMatrix4 chiral = id + Complex{double(c.sign)} * g5;
                           for (int mu = 0; mu < 4; ++mu) h += Complex{c.z[mu]} * (alpha()[mu] * chiral);
                       },
                       [&](const SemenoffMass& s) { h += Complex{s.mass} * alpha()[3]; },
                       [&](const HaldaneMass& m) { h += Complex{m.mass} * (g5 * alpha()[3]); },
                       [&](const Semimetal2D& s) {
                           h += kinetic(spec, 2, -s.v_dirac);
                           h -= Complex{s.mu_p} * id;
                       },
                       [&](const Semimetal3D& s) { h += kinetic(spec, 3, -s.v_dirac); },
                   },
                   term);
    }
    return h;
}

BilinearFlags preserved_bilinears(const ComplexMatrix4& h, double tol) {
    const ComplexMatrix4 traceless = h - (0.25 * h.trace()) * ComplexMatrix4::identity();
    const ComplexMatrix4 ht = traceless.transpose();
    auto preserves = [&](const ComplexMatrix4& x) { return (x * traceless + ht * x).frobenius_norm() <= tol; };
    return {preserves(conjugation_C()), preserves(conjugation_C_gamma5())};
}

GaugeStripped gauge_strip(const HamiltonianSpec& spec) {
    GaugeStripped out{spec, spec.charge * spec.potential[0]};
    out.spec.potential[0] = 0.0;
    for (ExtraTerm& t : out.spec.extras) {
        if (auto* s = std::get_if<Semimetal2D>(&t)) {
            out.phase_rate -= s->mu_p;
            s->mu_p = 0.0;
        }
    }
    return out;
}

ComplexMatrix4 evolve_constant(const ComplexMatrix4& h, double t) {
    if (!h.is_finite() || !std::isfinite(t)) throw std::invalid_argument("evolve_constant: non-finite input");
    if (!is_hermitian(h)) throw std::invalid_argument("evolve_constant: Hamiltonian is not Hermitian");
    if (t == 0.0) return ComplexMatrix4::identity();
    // Keep each exponent inside the accurate range of mat_exp.
    const double size = operator_norm(h) * std::abs(t);
    const auto pieces = static_cast<std::uint64_t>(std::max(1.0, std::ceil(size / 10.0)));
    ComplexMatrix4 step = mat_exp((-kI * (t / static_cast<double>(pieces))) * h);
    ComplexMatrix4 u = ComplexMatrix4::identity();
    for (std::uint64_t n = pieces; n > 0; n >>= 1) {
        if (n & 1U) u = step * u;
        if (n > 1) step = step * step;
    }
    return u;
}

double Schedule::total_duration() const {
    double t = 0.0;
    for (const Segment& s : segments) t += s.duration;
    return t;
}

Schedule Schedule::constant(const HamiltonianSpec& spec, double duration) { return {{{duration, spec}}}; }

namespace {

void check_schedule(const Schedule& schedule, int steps) {
    if (steps < 1) throw std::invalid_argument("evolve_ordered: steps_per_segment must be >= 1");
    for (const Segment& s : schedule.segments) {
        if (!(s.duration >= 0.0) || !std::isfinite(s.duration)) {
            throw std::invalid_argument("evolve_ordered: segment durations must be finite and >= 0");
        }
    }
}

ComplexMatrix4 evolve_segment(const ComplexMatrix4& h, double duration, int steps) {
    // For a constant segment every midpoint step uses the same H.
    const ComplexMatrix4 step = evolve_constant(h, duration / steps);
    ComplexMatrix4 u = ComplexMatrix4::identity();
    for (int n = 0; n < steps; ++n) u = step * u;
    return u;
}

}  // namespace

ComplexMatrix4 evolve_ordered(const Schedule& schedule, int steps_per_segment) {
    check_schedule(schedule, steps_per_segment);
    ComplexMatrix4 u = ComplexMatrix4::identity();
    for (const Segment& s : schedule.segments) {
        if (s.duration == 0.0) continue;
        u = evolve_segment(build_hamiltonian(s.spec), s.duration, steps_per_segment) * u;
    }
    return u;
}

ComplexMatrix4 evolve_until(const Schedule& schedule, double t, int steps_per_segment) {
    check_schedule(schedule, steps_per_segment);
    const double total = schedule.total_duration();
    if (!(t >= 0.0) || t > total * (1.0 + 1e-12) + 1e-300) {
        throw std::invalid_argument("evolve_until: time " + std::to_string(t) + " outside [0, " +
                                    std::to_string(total) + "]");
    }
    ComplexMatrix4 u = ComplexMatrix4::identity();
    double elapsed = 0.0;
    for (const Segment& s : schedule.segments) {
        if (elapsed >= t) break;
        const double dt = std::min(s.duration, t - elapsed);
        if (dt > 0.0) u = evolve_segment(build_hamiltonian(s.spec), dt, steps_per_segment) * u;
        elapsed += s.duration;
    }
    return u;
}

ComplexMatrix4 evolve_ordered(const TimeDependentHamiltonian& h, double t0, double t1, int steps) {
    if (steps < 1) throw std::invalid_argument("evolve_ordered: steps must be >= 1");
    const double dt = (t1 - t0) / steps;
    ComplexMatrix4 u = ComplexMatrix4::identity();
    for (int n = 0; n < steps; ++n) u = evolve_constant(h(t0 + (n + 0.5) * dt), dt) * u;
    return u;
}

TwoSpinorState evolve_two_lab(const TwoSpinorState& state, const Schedule& sched_a, const Schedule& sched_b,
                              int steps_per_segment) {
    return apply_local(state, evolve_ordered(sched_a, steps_per_segment), evolve_ordered(sched_b, steps_per_segment));
}

Complex i1_closed_form(const TwoSpinorState& state0, double m_a, double m_b, double t_a, double t_b) {
    const auto d = block_determinants(state0);
    const double plus = 2.0 * (m_a * t_a + m_b * t_b);
    const double minus = 2.0 * (m_a * t_a - m_b * t_b);
    return d[0] * std::polar(1.0, -plus) + d[1] * std::polar(1.0, -minus) + d[2] * std::polar(1.0, minus) +
           d[3] * std::polar(1.0, plus);
}

double predict_period(const HamiltonianSpec& spec) {
    spec.validate();
    if (!spec.extras.empty()) throw std::invalid_argument("predict_period: only plain Dirac specs are supported");
    double e2 = spec.mass * spec.mass;
    for (int mu = 1; mu <= 3; ++mu) {
        const double p = spec.momentum[mu - 1] + spec.charge * spec.potential[mu];
        e2 += p * p;
    }
    if (e2 == 0.0) return std::numeric_limits<double>::infinity();
    return std::numbers::pi / std::sqrt(e2);
}

PeriodPrediction predict_periods(const HamiltonianSpec& spec_a, const HamiltonianSpec& spec_b) {
    return {predict_period(spec_a), predict_period(spec_b)};
}

}  // namespace dirac
