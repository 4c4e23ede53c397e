// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/suites.hpp"

#include "dirac/algebra.hpp"
#include "dirac/evolution.hpp"
#include "dirac/foldy_wouthuysen.hpp"
#include "dirac/harness/period.hpp"
#include "dirac/harness/random.hpp"
#include "dirac/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dirac::harness {

bool PropertyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "lorentz", "invariance", "evolution", "fw", "all"};
    return names;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string compact(const io::Json& j) {
    std::string s = io::dump(j, -1);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::string state_text(const TwoSpinorState& s) { return compact(io::state_to_json(s)); }
std::string spec_text(const HamiltonianSpec& s) { return compact(io::spec_to_json(s)); }

std::string matrix_text(const ComplexMatrix4& m) {
    io::Json rows = io::Json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        io::Json row = io::Json::array();
        for (std::size_t c = 0; c < 4; ++c) row.push_back(io::Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return compact(rows);
}

double rel_dev(Complex a, Complex b, double floor) { return std::abs(a - b) / std::max(std::abs(b), floor); }

struct Run {
    std::string suite;
    std::uint64_t seed;
    int trials;
    double tol;
    KernelSet kernels;
    std::vector<PropertyResult>* out;
};

// One property: tracks the worst observation and a printable witness.
class Property {
public:
    Property(Run& run, std::string name, double default_threshold, Comparison cmp = Comparison::AtMost,
             bool fixed_threshold = false)
        : run_(run), rng_(make_rng(run.seed, fnv1a(run.suite + "/" + name))) {
        result_.suite = run.suite;
        result_.name = std::move(name);
        result_.comparison = cmp;
        const bool fixed = fixed_threshold || cmp == Comparison::Exceeds;
        result_.threshold = fixed ? default_threshold : std::min(default_threshold, run.tol);
        result_.worst = cmp == Comparison::AtMost ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    Property(const Property&) = delete;
    Property& operator=(const Property&) = delete;

    ~Property() {
        if (result_.comparison == Comparison::AtMost) {
            result_.passed = result_.cases > 0 && result_.worst <= result_.threshold;
        } else {
            result_.passed = result_.worst > result_.threshold;
        }
        if (result_.passed) {
            result_.counterexample.clear();
        } else if (result_.comparison == Comparison::Exceeds) {
            result_.counterexample = "no case exceeded the threshold; largest: " + witness_;
        } else {
            result_.counterexample = witness_;
        }
        run_.out->push_back(std::move(result_));
    }

    Rng& rng() { return rng_; }
    [[nodiscard]] int trials(int divisor = 1) const { return std::max(1, run_.trials / divisor); }
    [[nodiscard]] double threshold() const { return result_.threshold; }
    [[nodiscard]] const KernelSet& kernels() const { return run_.kernels; }

    void observe(double value, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
        if (value > result_.worst || result_.cases == 1) {
            result_.worst = value;
            witness_ = describe();
        }
    }

private:
    Run& run_;
    Rng rng_;
    PropertyResult result_;
    std::string witness_;
};

// --- algebra --------------------------------------------------------------

void suite_algebra(Run& run) {
    const ComplexMatrix4 id = ComplexMatrix4::identity();
    const ComplexMatrix4 c = conjugation_C();
    const ComplexMatrix4 g5 = gamma5();
    const ComplexMatrix4 cg5 = conjugation_C_gamma5();
    {
        Property p(run, "clifford_relations", 1e-15);
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                const double d = max_abs_diff(anticommutator(gamma(mu), gamma(nu)), Complex{2.0 * metric(mu, nu)} * id);
                p.observe(d, [=] { return "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu); });
            }
        }
    }
    {
        Property p(run, "gamma5_identities", 1e-15);
        const ComplexMatrix4 prod = kI * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
        p.observe(max_abs_diff(g5, prod), [] { return "gamma5 != i g0 g1 g2 g3"; });
        p.observe(max_abs_diff(g5 * g5, id), [] { return "gamma5^2 != I"; });
        p.observe(max_abs_diff(g5, g5.adjoint()), [] { return "gamma5 not Hermitian"; });
        for (int mu = 0; mu < 4; ++mu) {
            p.observe(anticommutator(g5, gamma(mu)).max_abs(), [=] { return "{g5, g" + std::to_string(mu) + "} != 0"; });
        }
    }
    {
        Property p(run, "conjugation_identities", 1e-15);
        p.observe(max_abs_diff(c, kI * (gamma(1) * gamma(3))), [] { return "C != i g1 g3"; });
        p.observe(max_abs_diff(c * c, id), [] { return "C^2 != I"; });
        p.observe(max_abs_diff(c, c.adjoint()), [] { return "C != C^dagger"; });
        p.observe(max_abs_diff(c.transpose(), -c), [] { return "C^T != -C"; });
        p.observe(max_abs_diff(cg5.transpose(), -cg5), [] { return "(C g5)^T != -C g5"; });
    }
    {
        Property p(run, "gamma_transpose_via_C", 1e-15);
        for (int mu = 0; mu < 4; ++mu) {
            p.observe(max_abs_diff(gamma(mu).transpose(), c * gamma(mu) * c), [=] { return "mu=" + std::to_string(mu); });
        }
    }
    // Ordered products of 1..4 distinct gamma matrices.
    std::vector<std::vector<int>> products;
    std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& cur) {
        if (!cur.empty()) products.push_back(cur);
        if (cur.size() == 4) return;
        for (int mu = 0; mu < 4; ++mu) {
            if (std::find(cur.begin(), cur.end(), mu) != cur.end()) continue;
            cur.push_back(mu);
            extend(cur);
            cur.pop_back();
        }
    };
    std::vector<int> scratch;
    extend(scratch);
    auto product_name = [](const std::vector<int>& idx) {
        std::string s;
        for (int i : idx) s += "g" + std::to_string(i);
        return s;
    };
    {
        Property p(run, "transpose_table_C", 1e-15);
        constexpr std::array<double, 5> sign{0, 1, -1, -1, 1};
        for (const auto& idx : products) {
            const ComplexMatrix4 g = gamma_product(idx);
            const double d = max_abs_diff(g.transpose() * c, Complex{sign[idx.size()]} * (c * g));
            p.observe(d, [&] { return product_name(idx); });
        }
    }
    {
        Property p(run, "transpose_table_Cg5", 1e-15);
        constexpr std::array<double, 5> sign{0, -1, -1, 1, 1};
        for (const auto& idx : products) {
            const ComplexMatrix4 g = gamma_product(idx);
            const double d = max_abs_diff(g.transpose() * cg5, Complex{sign[idx.size()]} * (c * g5 * g));
            p.observe(d, [&] { return product_name(idx); });
        }
    }
    {
        Property p(run, "chiral_projectors", 1e-15);
        const ComplexMatrix4 pl = chiral_projector(Hand::Left);
        const ComplexMatrix4 pr = chiral_projector(Hand::Right);
        p.observe(max_abs_diff(pl * pl, pl), [] { return "P_L^2 != P_L"; });
        p.observe(max_abs_diff(pr * pr, pr), [] { return "P_R^2 != P_R"; });
        p.observe(max_abs_diff(pl + pr, id), [] { return "P_L + P_R != I"; });
        p.observe((pl * pr).max_abs(), [] { return "P_L P_R != 0"; });
    }
    {
        Property p(run, "mat_exp_inverse", 1e-12);
        std::uniform_real_distribution<double> norm(0.0, 5.0);
        for (int n = 0; n < p.trials(); ++n) {
            ComplexMatrix4 a = random_matrix(p.rng());
            a = a * (norm(p.rng()) / std::max(operator_norm(a), 1e-300));
            const double d = max_abs_diff(mat_exp(a) * mat_exp(-a), id);
            p.observe(d, [&] { return "A=" + matrix_text(a); });
        }
    }
    {
        // exp(i theta M) = cos(theta) I + i sin(theta) M for involutions M.
        Property p(run, "mat_exp_involution_formula", 1e-12);
        const std::array<ComplexMatrix4, 6> invol{gamma(0), g5, c, kI * gamma(1), kI * gamma(2), kI * gamma(3)};
        std::uniform_real_distribution<double> theta(-10.0, 10.0);
        for (int n = 0; n < p.trials(); ++n) {
            const double th = theta(p.rng());
            const ComplexMatrix4& m = invol[static_cast<std::size_t>(n) % invol.size()];
            const ComplexMatrix4 ref = Complex{std::cos(th)} * id + (kI * std::sin(th)) * m;
            p.observe(max_abs_diff(mat_exp((kI * th) * m), ref), [&] { return "theta=" + io::format_double(th); });
        }
        p.observe(max_abs_diff(mat_exp((kI * std::numbers::pi) * gamma(0)), -id), [] { return "exp(i pi g0) != -I"; });
    }
}

// --- lorentz --------------------------------------------------------------

void suite_lorentz(Run& run) {
    const ComplexMatrix4 c = conjugation_C();
    const ComplexMatrix4 cg5 = conjugation_C_gamma5();
    const RealMatrix4 g = minkowski_metric();
    auto params_text = [](const LorentzParams& l) {
        io::Json j = io::Json::array();
        for (double x : l.components()) j.push_back(x);
        return "omega(01,02,03,12,13,23)=" + compact(j);
    };
    auto sampled = [&](const char* name, double thr, auto&& measure) {
        Property p(run, name, thr);
        for (int n = 0; n < p.trials(); ++n) {
            const LorentzParams l = random_params(p.rng());
            p.observe(measure(l), [&] { return params_text(l); });
        }
    };
    sampled("S_transpose_C_S", 1e-10, [&](const LorentzParams& l) {
        const ComplexMatrix4 s = spinor_rep(l);
        return max_abs_diff(s.transpose() * c * s, c);
    });
    sampled("S_transpose_Cg5_S", 1e-10, [&](const LorentzParams& l) {
        const ComplexMatrix4 s = spinor_rep(l);
        return max_abs_diff(s.transpose() * cg5 * s, cg5);
    });
    sampled("vector_rep_intertwines", 1e-10, [&](const LorentzParams& l) {
        const ComplexMatrix4 s = spinor_rep(l);
        const ComplexMatrix4 si = spinor_rep_inverse(l);
        const RealMatrix4 lam = vector_rep(l);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
            ComplexMatrix4 rhs;
            for (int nu = 0; nu < 4; ++nu) rhs += Complex{lam(mu, nu)} * gamma(nu);
            worst = std::max(worst, max_abs_diff(si * gamma(mu) * s, rhs));
        }
        return worst;
    });
    sampled("vector_rep_preserves_metric", 1e-10, [&](const LorentzParams& l) {
        const RealMatrix4 lam = vector_rep(l);
        return max_abs_diff(lam.transpose() * g * lam, g);
    });
    sampled("S_commutes_with_gamma5", 1e-10,
            [&](const LorentzParams& l) { return commutator(spinor_rep(l), gamma5()).max_abs(); });
    sampled("S_inverse", 1e-10, [&](const LorentzParams& l) {
        return max_abs_diff(spinor_rep(l) * spinor_rep_inverse(l), ComplexMatrix4::identity());
    });
    {
        Property p(run, "generator_identities", 1e-15);
        for (int r = 0; r < 4; ++r) {
            for (int s = 0; s < 4; ++s) {
                const ComplexMatrix4 ref =
                    0.5 * (gamma(r) * gamma(s)) - Complex{0.5 * metric(r, s)} * ComplexMatrix4::identity();
                const double d = std::max(max_abs_diff(generator(r, s), ref), max_abs_diff(generator(r, s), -generator(s, r)));
                p.observe(d, [=] { return "rho=" + std::to_string(r) + " sigma=" + std::to_string(s); });
            }
        }
    }
    {
        // P keeps psi^T C phi and flips psi^T C g5 phi; CPT flips both.
        Property p(run, "discrete_transforms_on_bilinears", 1e-13);
        for (int n = 0; n < p.trials(); ++n) {
            const ComplexVector4 psi = random_spinor(p.rng()).amps;
            const ComplexVector4 phi = random_spinor(p.rng()).amps;
            const Complex bc = dot(psi, c * phi);
            const Complex bc5 = dot(psi, cg5 * phi);
            const double scale = std::sqrt(psi.norm_squared() * phi.norm_squared());
            const auto pp = discrete_apply(DiscreteTransform::P, psi);
            const auto pf = discrete_apply(DiscreteTransform::P, phi);
            const auto cp = discrete_apply(DiscreteTransform::CPT, psi);
            const auto cf = discrete_apply(DiscreteTransform::CPT, phi);
            const double d = std::max({std::abs(dot(pp, c * pf) - bc), std::abs(dot(pp, cg5 * pf) + bc5),
                                       std::abs(dot(cp, c * cf) + bc), std::abs(dot(cp, cg5 * cf) + bc5)}) /
                             scale;
            p.observe(d, [&] { return "random spinor pair " + std::to_string(n); });
        }
    }
    {
        Property p(run, "cpt_composition", 1e-15);
        for (int n = 0; n < p.trials(10); ++n) {
            const ComplexVector4 psi = random_spinor(p.rng()).amps;
            const ComplexVector4 composed = discrete_apply(
                DiscreteTransform::Ccharge,
                discrete_apply(DiscreteTransform::P, discrete_apply(DiscreteTransform::T, psi)));
            const ComplexVector4 direct = discrete_apply(DiscreteTransform::CPT, psi);
            double d = 0.0;
            for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(composed[j] - direct[j]));
            p.observe(d / std::sqrt(psi.norm_squared()), [&] { return "random spinor " + std::to_string(n); });
        }
    }
}

// --- invariance -----------------------------------------------------------

InvariantRecord expansions(const TwoSpinorState& s) { return all_invariants(s); }

void suite_invariance(Run& run) {
    {
        Property p(run, "catalog_values", 1e-12);
        for (const std::string& name : catalog_names()) {
            const CatalogEntry e = catalog(name);
            const InvariantRecord r = expansions(e.state);
            for (InvariantId id : kAllInvariants) {
                p.observe(std::abs(std::abs(r[id]) - e.expected[id]),
                          [&] { return name + " " + std::string(to_string(id)); });
            }
            p.observe(std::abs(e.state.norm_squared() - 1.0), [&] { return name + " norm"; });
        }
    }
    {
        Property p(run, "product_states_vanish", 1e-14);
        for (int n = 0; n < p.trials(); ++n) {
            Spinor a = random_spinor(p.rng());
            Spinor b = random_spinor(p.rng());
            a.amps *= Complex{1.0 / std::sqrt(a.norm_squared())};
            b.amps *= Complex{1.0 / std::sqrt(b.norm_squared())};
            const TwoSpinorState s = product_state(a, b);
            const InvariantRecord r = expansions(s);
            const InvariantRecord t = trace_form::all(s, p.kernels());
            double worst = 0.0;
            for (InvariantId id : kAllInvariants) worst = std::max({worst, std::abs(r[id]), std::abs(t[id])});
            p.observe(worst, [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "local_lorentz_invariance", 1e-10);
        for (int n = 0; n < p.trials(); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const LorentzParams la = random_params(p.rng());
            const LorentzParams lb = random_params(p.rng());
            const TwoSpinorState t = apply_local(s, spinor_rep(la), spinor_rep(lb));
            const InvariantRecord before = trace_form::all(s, p.kernels());
            const InvariantRecord after = trace_form::all(t, p.kernels());
            const InvariantRecord eb = expansions(s);
            const InvariantRecord ea = expansions(t);
            double worst = 0.0;
            for (InvariantId id : kAllInvariants) {
                const double floor = id == InvariantId::I3 ? 1e-4 : 1e-3;
                worst = std::max({worst, rel_dev(after[id], before[id], floor), rel_dev(ea[id], eb[id], floor)});
            }
            p.observe(worst, [&] {
                return "state=" + state_text(s) + " S_A=" + matrix_text(spinor_rep(la)) +
                       " S_B=" + matrix_text(spinor_rep(lb));
            });
        }
    }
    {
        Property p(run, "sl4_invariance_of_i3", 1e-10);
        for (int n = 0; n < p.trials(5); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const ComplexMatrix4 a = random_sl4(p.rng());
            const ComplexMatrix4 b = random_sl4(p.rng());
            const double d = rel_dev(i3(apply_local(s, a, b)), i3(s), 1e-4);
            p.observe(d, [&] { return "state=" + state_text(s) + " M_A=" + matrix_text(a) + " M_B=" + matrix_text(b); });
        }
    }
    {
        // Sign of each invariant under gamma^0 on Alice's side, then on Bob's.
        Property p(run, "parity_signs", 1e-13);
        constexpr std::array<double, 5> alice{1, -1, 1, -1, 1};
        constexpr std::array<double, 5> bob{1, -1, -1, 1, 1};
        const ComplexMatrix4 id = ComplexMatrix4::identity();
        for (int n = 0; n < p.trials(); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const InvariantRecord r = expansions(s);
            const InvariantRecord ra = expansions(apply_local(s, gamma(0), id));
            const InvariantRecord rb = expansions(apply_local(s, id, gamma(0)));
            double worst = 0.0;
            for (std::size_t k = 0; k < 5; ++k) {
                const InvariantId id5 = kAllInvariants[k];
                worst = std::max({worst, std::abs(ra[id5] - alice[k] * r[id5]), std::abs(rb[id5] - bob[k] * r[id5])});
            }
            p.observe(worst, [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "cpt_signs", 1e-13);
        const ComplexMatrix4 cpt = -kI * gamma5();
        const ComplexMatrix4 id = ComplexMatrix4::identity();
        for (int n = 0; n < p.trials(); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const InvariantRecord r = expansions(s);
            double worst = 0.0;
            for (const TwoSpinorState& t : {apply_local(s, cpt, id), apply_local(s, id, cpt)}) {
                const InvariantRecord q = expansions(t);
                for (InvariantId id5 : kAllInvariants) {
                    const double sign = id5 == InvariantId::I3 ? 1.0 : -1.0;
                    worst = std::max(worst, std::abs(q[id5] - sign * r[id5]));
                }
            }
            p.observe(worst, [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "oracle_equivalence", 1e-13);
        for (int n = 0; n < p.trials(); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const InvariantRecord e = expansions(s);
            const InvariantRecord t = trace_form::all(s, p.kernels());
            double worst = 0.0;
            for (InvariantId id : kAllInvariants) worst = std::max(worst, std::abs(e[id] - t[id]));
            worst = std::max({worst, std::abs(e.i1 - i1_from_blocks(s)), std::abs(e.i3 - determinant(s.coeffs)),
                              std::abs(e.i3 - trace_form::i3_via_c_gamma5(s, p.kernels()))});
            p.observe(worst, [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "weyl_reduction", 1e-12);
        Property z(run, "weyl_i3_vanishes", 1e-14);
        for (int n = 0; n < p.trials(5); ++n) {
            const Hand ha = n % 2 ? Hand::Left : Hand::Right;
            const Hand hb = (n / 2) % 2 ? Hand::Left : Hand::Right;
            const TwoSpinorState s = random_weyl_state(p.rng(), ha, hb);
            const Complex w = wootters_weyl(s);
            const InvariantRecord r = expansions(s);
            double worst = 0.0;
            for (InvariantId id : {InvariantId::I1, InvariantId::I2, InvariantId::I2A, InvariantId::I2B}) {
                worst = std::max(worst, std::min(std::abs(r[id] - 4.0 * w), std::abs(r[id] + 4.0 * w)));
            }
            p.observe(worst, [&] { return state_text(s); });
            z.observe(std::abs(r.i3), [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "maximal_value_bounds", 1e-9);
        auto excess = [](const InvariantRecord& r) {
            double e = -std::numeric_limits<double>::infinity();
            for (InvariantId id : kAllInvariants) e = std::max(e, std::abs(r[id]) - (id == InvariantId::I3 ? 1.0 / 16 : 0.5));
            return e;
        };
        for (const std::string& name : catalog_names()) {
            p.observe(excess(expansions(catalog(name).state)), [&] { return name; });
        }
        for (int n = 0; n < p.trials(); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            p.observe(excess(expansions(s)), [&] { return state_text(s); });
        }
    }
    {
        Property p(run, "homogeneity", 1e-13);
        for (int n = 0; n < p.trials(10); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const Complex c = random_complex(p.rng());
            const TwoSpinorState t{c * s.coeffs};
            const InvariantRecord r = expansions(s);
            const InvariantRecord q = expansions(t);
            double worst = rel_dev(q.i3, c * c * c * c * r.i3, 1e-4);
            for (InvariantId id : {InvariantId::I1, InvariantId::I2, InvariantId::I2A, InvariantId::I2B}) {
                worst = std::max(worst, rel_dev(q[id], c * c * r[id], 1e-3));
            }
            p.observe(worst, [&] { return state_text(s); });
        }
    }
}

// --- evolution ------------------------------------------------------------

constexpr std::array<double, 5> kDriftTimes{0.7, 1.9, 3.4, 6.3, 10.0};

// max_t | |I(t)| - |I(0)| | per invariant for constant local Hamiltonians.
InvariantMagnitudes drift(const TwoSpinorState& s, const HamiltonianSpec& a, const HamiltonianSpec& b) {
    const ComplexMatrix4 ha = build_hamiltonian(a);
    const ComplexMatrix4 hb = build_hamiltonian(b);
    const InvariantRecord r0 = all_invariants(s);
    InvariantMagnitudes d{};
    for (double t : kDriftTimes) {
        const InvariantRecord r = all_invariants(apply_local(s, evolve_constant(ha, t), evolve_constant(hb, t)));
        d.i1 = std::max(d.i1, std::abs(std::abs(r.i1) - std::abs(r0.i1)));
        d.i2 = std::max(d.i2, std::abs(std::abs(r.i2) - std::abs(r0.i2)));
        d.i2a = std::max(d.i2a, std::abs(std::abs(r.i2a) - std::abs(r0.i2a)));
        d.i2b = std::max(d.i2b, std::abs(std::abs(r.i2b) - std::abs(r0.i2b)));
        d.i3 = std::max(d.i3, std::abs(std::abs(r.i3) - std::abs(r0.i3)));
    }
    return d;
}

double max_drift(const InvariantMagnitudes& d) { return std::max({d.i1, d.i2, d.i2a, d.i2b, d.i3}); }

HamiltonianSpec moving(double mass, std::array<double, 3> k) {
    HamiltonianSpec s;
    s.mass = mass;
    s.momentum = k;
    return s;
}

void suite_evolution(Run& run) {
    auto pair_text = [](const TwoSpinorState& s, const HamiltonianSpec& a, const HamiltonianSpec& b) {
        return "state=" + state_text(s) + " spec_a=" + spec_text(a) + " spec_b=" + spec_text(b);
    };
    {
        Property p(run, "hamiltonian_hermitian", 1e-13);
        for (int n = 0; n < p.trials(); ++n) {
            const HamiltonianSpec s = random_spec(p.rng());
            const ComplexMatrix4 h = build_hamiltonian(s);
            p.observe(max_abs_diff(h, h.adjoint()), [&] { return spec_text(s); });
        }
    }
    {
        Property p(run, "bilinear_flags_imply_preservation", 1e-9);
        for (int n = 0; n < p.trials(20); ++n) {
            const HamiltonianSpec a = random_spec(p.rng());
            const HamiltonianSpec b = random_spec(p.rng());
            const TwoSpinorState s = random_state(p.rng());
            const BilinearFlags fa = preserved_bilinears(build_hamiltonian(a));
            const BilinearFlags fb = preserved_bilinears(build_hamiltonian(b));
            const InvariantMagnitudes d = drift(s, a, b);
            double worst = d.i3;  // |det| is fixed by any local unitary
            if (fa.preserves_C && fb.preserves_C) worst = std::max(worst, d.i1);
            if (fa.preserves_Cg5 && fb.preserves_Cg5) worst = std::max(worst, d.i2);
            if (fa.preserves_C && fb.preserves_Cg5) worst = std::max(worst, d.i2a);
            if (fa.preserves_Cg5 && fb.preserves_C) worst = std::max(worst, d.i2b);
            p.observe(worst, [&] { return pair_text(s, a, b); });
        }
    }
    {
        Property p(run, "massless_dirac_preserves_all", 1e-9);
        for (int n = 0; n < p.trials(20); ++n) {
            const HamiltonianSpec a = random_dirac_spec(p.rng(), false);
            const HamiltonianSpec b = random_dirac_spec(p.rng(), false);
            const TwoSpinorState s = random_state(p.rng());
            p.observe(max_drift(drift(s, a, b)), [&] { return pair_text(s, a, b); });
        }
    }
    {
        Property p(run, "quadratic_terms_preserve_all", 1e-9);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int n = 0; n < p.trials(20); ++n) {
            HamiltonianSpec a = random_dirac_spec(p.rng(), false);
            HamiltonianSpec b = random_dirac_spec(p.rng(), false);
            switch (n % 4) {
                case 0:
                    a.extras.emplace_back(SemenoffMass{u(p.rng())});
                    b.extras.emplace_back(HaldaneMass{u(p.rng())});
                    break;
                case 1:
                    a.extras.emplace_back(Semimetal2D{1.0 + 0.5 * u(p.rng()), u(p.rng())});
                    b.extras.emplace_back(Semimetal3D{1.0 + 0.5 * u(p.rng())});
                    break;
                case 2:
                    a.extras.emplace_back(Semimetal2D{1.0, 0.0});
                    a.extras.emplace_back(SemenoffMass{u(p.rng())});
                    b.extras.emplace_back(Semimetal2D{1.0, 0.3});
                    b.extras.emplace_back(HaldaneMass{u(p.rng())});
                    break;
                default:
                    a.extras.emplace_back(Semimetal3D{0.8});
                    a.extras.emplace_back(HaldaneMass{u(p.rng())});
                    b.extras.emplace_back(SemenoffMass{u(p.rng())});
                    b.extras.emplace_back(HaldaneMass{u(p.rng())});
                    break;
            }
            const TwoSpinorState s = random_state(p.rng());
            const BilinearFlags fa = preserved_bilinears(build_hamiltonian(a));
            const BilinearFlags fb = preserved_bilinears(build_hamiltonian(b));
            const bool flags = fa.preserves_C && fa.preserves_Cg5 && fb.preserves_C && fb.preserves_Cg5;
            p.observe(flags ? max_drift(drift(s, a, b)) : std::numeric_limits<double>::infinity(),
                      [&] { return pair_text(s, a, b); });
        }
    }
    {
        Property p(run, "massive_dirac_preserves_i2", 1e-9);
        for (int n = 0; n < p.trials(20); ++n) {
            const HamiltonianSpec a = random_dirac_spec(p.rng(), true);
            const HamiltonianSpec b = random_dirac_spec(p.rng(), true);
            const TwoSpinorState s = random_state(p.rng());
            const InvariantMagnitudes d = drift(s, a, b);
            p.observe(std::max(d.i2, d.i3), [&] { return pair_text(s, a, b); });
        }
    }
    const HamiltonianSpec heavy = moving(1.0, {0.6, 0.0, 0.8});
    const HamiltonianSpec light = moving(0.0, {0.3, -0.2, 0.5});
    {
        Property p(run, "massive_dirac_changes_i1_on_epr", 1e-3, Comparison::Exceeds);
        const TwoSpinorState s = catalog("epr").state;
        p.observe(drift(s, heavy, heavy).i1, [&] { return pair_text(s, heavy, heavy); });
    }
    {
        Property keep(run, "alice_mass_preserves_i2_i2b", 1e-9);
        Property change(run, "alice_mass_changes_i1_i2a", 1e-3, Comparison::Exceeds);
        for (const std::string& name : catalog_names()) {
            const TwoSpinorState s = catalog(name).state;
            const InvariantMagnitudes d = drift(s, heavy, light);
            keep.observe(std::max(d.i2, d.i2b), [&] { return pair_text(s, heavy, light); });
        }
        const TwoSpinorState mix = catalog("chiral_epr").state;
        const InvariantMagnitudes d = drift(mix, heavy, light);
        change.observe(std::min(d.i1, d.i2a), [&] { return pair_text(mix, heavy, light); });
    }
    {
        Property keep(run, "bob_mass_preserves_i2_i2a", 1e-9);
        Property change(run, "bob_mass_changes_i1_i2b", 1e-3, Comparison::Exceeds);
        for (const std::string& name : catalog_names()) {
            const TwoSpinorState s = catalog(name).state;
            const InvariantMagnitudes d = drift(s, light, heavy);
            keep.observe(std::max(d.i2, d.i2a), [&] { return pair_text(s, light, heavy); });
        }
        const TwoSpinorState mix = catalog("chiral_epr").state;
        const InvariantMagnitudes d = drift(mix, light, heavy);
        change.observe(std::min(d.i1, d.i2b), [&] { return pair_text(mix, light, heavy); });
    }
    auto breaks_both = [&](const char* name, const HamiltonianSpec& spec) {
        Property p(run, name, 1e-3, Comparison::Exceeds);
        const BilinearFlags f = preserved_bilinears(build_hamiltonian(spec));
        const double i1_drift = drift(catalog("epr").state, spec, spec).i1;
        const double i2_drift = drift(catalog("i2_max").state, spec, spec).i2;
        const double effect = (f.preserves_C || f.preserves_Cg5) ? 0.0 : std::min(i1_drift, i2_drift);
        p.observe(effect, [&] {
            return "spec=" + spec_text(spec) + " drift(|I1|, epr)=" + io::format_double(i1_drift) +
                   " drift(|I2|, i2_max)=" + io::format_double(i2_drift);
        });
    };
    {
        HamiltonianSpec s = moving(1.0, {0.6, 0.0, 0.8});
        s.extras.emplace_back(YukawaPseudoscalar{0.7});
        breaks_both("mass_plus_pseudoscalar_breaks_both", s);
    }
    {
        HamiltonianSpec s = moving(0.0, {0.6, 0.0, 0.8});
        s.extras.emplace_back(ChiralCoupling{{0.9, 0.2, -0.4, 0.3}, 1});
        breaks_both("chiral_coupling_breaks_both", s);
    }
    {
        Property p(run, "u1_phase_law_i2", 1e-9);
        std::uniform_real_distribution<double> ut(0.0, 10.0);
        for (int n = 0; n < p.trials(20); ++n) {
            const HamiltonianSpec a = random_dirac_spec(p.rng(), true);
            const HamiltonianSpec b = random_dirac_spec(p.rng(), n % 2 == 0);
            const TwoSpinorState s = random_state(p.rng());
            const double t = ut(p.rng());
            const TwoSpinorState st =
                evolve_two_lab(s, Schedule::constant(a, t), Schedule::constant(b, t), 1);
            const double rate = a.charge * a.potential[0] + b.charge * b.potential[0];
            const Complex expected = std::polar(1.0, -2.0 * rate * t) * i2(s);
            p.observe(std::abs(i2(st) - expected), [&] { return pair_text(s, a, b) + " t=" + io::format_double(t); });
        }
    }
    {
        Property p(run, "gauge_strip_factorization", 1e-12);
        for (int n = 0; n < p.trials(10); ++n) {
            HamiltonianSpec s = random_spec(p.rng());
            const double t = 2.5;
            const GaugeStripped g = gauge_strip(s);
            const ComplexMatrix4 u = evolve_constant(build_hamiltonian(s), t);
            const ComplexMatrix4 v = std::polar(1.0, -g.phase_rate * t) * evolve_constant(build_hamiltonian(g.spec), t);
            p.observe(max_abs_diff(u, v), [&] { return spec_text(s); });
        }
    }
    {
        Property p(run, "ordered_two_segments", 1e-12);
        for (int n = 0; n < p.trials(20); ++n) {
            const HamiltonianSpec a = random_spec(p.rng());
            const HamiltonianSpec b = random_spec(p.rng());
            const Schedule sched{{{0.8, a}, {1.3, b}}};
            const ComplexMatrix4 ref = evolve_constant(build_hamiltonian(b), 1.3) * evolve_constant(build_hamiltonian(a), 0.8);
            p.observe(max_abs_diff(evolve_ordered(sched, 3), ref), [&] { return spec_text(a) + " then " + spec_text(b); });
        }
    }
    {
        Property p(run, "midpoint_convergence_ratio", 0.5, Comparison::AtMost, true);
        const TimeDependentHamiltonian h = [](double t) {
            return gamma(0) + Complex{std::sin(t)} * (gamma(0) * gamma(1)) + Complex{std::cos(2.0 * t)} * (gamma(0) * gamma(2));
        };
        const ComplexMatrix4 u1 = evolve_ordered(h, 0.0, 2.0, 32);
        const ComplexMatrix4 u2 = evolve_ordered(h, 0.0, 2.0, 64);
        const ComplexMatrix4 u4 = evolve_ordered(h, 0.0, 2.0, 128);
        const double ratio = (u1 - u2).frobenius_norm() / (u2 - u4).frobenius_norm();
        p.observe(std::abs(ratio - 4.0), [&] { return "ratio=" + io::format_double(ratio); });
    }
    {
        Property p(run, "i1_closed_form", 1e-9);
        std::uniform_real_distribution<double> um(0.2, 2.0);
        for (int n = 0; n < p.trials(100); ++n) {
            const TwoSpinorState s = random_state(p.rng());
            const double ma = um(p.rng());
            const double mb = um(p.rng());
            const ComplexMatrix4 ha = build_hamiltonian(moving(ma, {0, 0, 0}));
            const ComplexMatrix4 hb = build_hamiltonian(moving(mb, {0, 0, 0}));
            for (int i = 0; i < 16; ++i) {
                for (int j = 0; j < 16; ++j) {
                    const double ta = 0.5 * i;
                    const double tb = 0.5 * j;
                    const Complex ev = i1(apply_local(s, evolve_constant(ha, ta), evolve_constant(hb, tb)));
                    p.observe(std::abs(ev - i1_closed_form(s, ma, mb, ta, tb)), [&] {
                        return "state=" + state_text(s) + " mA=" + io::format_double(ma) + " mB=" + io::format_double(mb);
                    });
                }
            }
        }
    }
    {
        // At rest I1 = A e^{-2imt} + B e^{2imt}: the complex value has period pi/m while
        // |I1| has period pi/2m.  With momentum |I1| itself has period pi/E.
        Property p(run, "fitted_period_matches_prediction", 1e-4, Comparison::AtMost, true);
        Property half(run, "rest_frame_abs_i1_half_period", 1e-4, Comparison::AtMost, true);
        struct Case {
            HamiltonianSpec spec;
            bool real_part;
        };
        for (const Case& c : {Case{moving(1.0, {0, 0, 0}), true}, Case{moving(2.5, {0, 0, 0}), true},
                              Case{moving(3.0, {4.0, 0, 0}), false}, Case{moving(0.5, {0.3, -0.4, 1.2}), false}}) {
            const double predicted = predict_period(c.spec);
            const TwoSpinorState s = random_state(p.rng());
            const ComplexMatrix4 h = build_hamiltonian(c.spec);
            const int samples = 512;
            const double dt = 6.0 * predicted / (samples - 1);
            std::vector<double> series;
            std::vector<double> magnitude;
            for (int n = 0; n < samples; ++n) {
                const Complex v = i1(apply_local(s, evolve_constant(h, n * dt), ComplexMatrix4::identity()));
                series.push_back(c.real_part ? v.real() : std::abs(v));
                magnitude.push_back(std::abs(v));
            }
            const PeriodFit fit = fit_period(series, dt);
            p.observe(std::abs(fit.period - predicted) / predicted, [&] {
                return "spec=" + spec_text(c.spec) + " fitted=" + io::format_double(fit.period) +
                       " predicted=" + io::format_double(predicted);
            });
            if (c.real_part) {
                const PeriodFit mf = fit_period(magnitude, dt);
                half.observe(std::abs(mf.period - 0.5 * predicted) / (0.5 * predicted),
                             [&] { return "spec=" + spec_text(c.spec) + " fitted=" + io::format_double(mf.period); });
            }
        }
    }
}

// --- fw -------------------------------------------------------------------

FWFieldData random_fields(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FWFieldData f;
    for (double& x : f.grad_A0) x = u(rng);
    for (double& x : f.dt_A) x = u(rng);
    for (auto& row : f.grad_A) {
        for (double& x : row) x = u(rng);
    }
    return f;
}

void suite_fw(Run& run) {
    const ComplexMatrix4 c = conjugation_C();
    const ComplexMatrix4 cg5 = conjugation_C_gamma5();
    auto ctx_text = [](const HamiltonianSpec& s) { return "spec=" + spec_text(s); };
    {
        Property p(run, "generator_intertwining", 1e-13);
        for (int n = 0; n < p.trials(); ++n) {
            const HamiltonianSpec spec = random_dirac_spec(p.rng(), true);
            const FWFieldData f = random_fields(p.rng());
            const ComplexMatrix4 s1 = fw_generator(1, spec, f);
            const ComplexMatrix4 s2 = fw_generator(2, spec, f);
            const double d = std::max({max_abs_diff(c * s1, s1.transpose() * c), max_abs_diff(c * s2, -(s2.transpose() * c)),
                                       max_abs_diff(cg5 * s1, -(s1.transpose() * cg5)),
                                       max_abs_diff(cg5 * s2, -(s2.transpose() * cg5))});
            p.observe(d, [&] { return ctx_text(spec); });
        }
    }
    {
        Property p(run, "transforms_unitary_unimodular", 1e-12);
        for (int n = 0; n < p.trials(10); ++n) {
            const HamiltonianSpec spec = random_dirac_spec(p.rng(), true);
            const FWContext ctx(spec, random_fields(p.rng()));
            double d = std::max(max_abs_diff(ctx.s1(), ctx.s1().adjoint()), max_abs_diff(ctx.s2(), ctx.s2().adjoint()));
            for (int order = 1; order <= 2; ++order) {
                const ComplexMatrix4 v = ctx.transform(order);
                d = std::max({d, max_abs_diff(v * v.adjoint(), ComplexMatrix4::identity()), std::abs(determinant(v) - 1.0)});
            }
            p.observe(d, [&] { return ctx_text(spec); });
        }
    }
    {
        Property p(run, "fw_picture_invariants", 1e-10);
        constexpr std::array<std::array<int, 2>, 5> orders{{{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 0}}};
        for (int n = 0; n < p.trials(5); ++n) {
            const FWContext ca(random_dirac_spec(p.rng(), true), random_fields(p.rng()));
            const FWContext cb(random_dirac_spec(p.rng(), true), random_fields(p.rng()));
            const TwoSpinorState s = random_state(p.rng());
            const InvariantRecord ref = all_invariants(s);
            for (const auto& o : orders) {
                const InvariantRecord r = fw_invariants(fw_transform_state(s, ca, cb, o[0], o[1]), ca, cb, o[0], o[1]);
                double worst = 0.0;
                for (InvariantId id : kAllInvariants) {
                    worst = std::max(worst, rel_dev(r[id], ref[id], id == InvariantId::I3 ? 1e-4 : 1e-3));
                }
                p.observe(worst, [&] {
                    return "state=" + state_text(s) + " spec_a=" + spec_text(ca.spec()) + " spec_b=" + spec_text(cb.spec()) +
                           " orders=" + std::to_string(o[0]) + "," + std::to_string(o[1]);
                });
            }
        }
    }
    {
        Property p(run, "i2_i3_without_compensators", 1e-10);
        for (int n = 0; n < p.trials(5); ++n) {
            const FWContext ca(random_dirac_spec(p.rng(), true), random_fields(p.rng()));
            const FWContext cb(random_dirac_spec(p.rng(), true), random_fields(p.rng()));
            const TwoSpinorState s = random_state(p.rng());
            const TwoSpinorState t = fw_transform_state(s, ca, cb, 2, 2);
            const double d = std::max(rel_dev(i2(t), i2(s), 1e-3), rel_dev(i3(t), i3(s), 1e-4));
            p.observe(d, [&] { return "state=" + state_text(s); });
        }
    }
    {
        Property comm(run, "hfw2_commutes_with_gamma0", 1e-12);
        Property block(run, "hfw2_upper_block_is_pauli", 1e-12);
        Rng& rng = comm.rng();
        for (int n = 0; n < comm.trials(10); ++n) {
            const HamiltonianSpec spec = random_dirac_spec(rng, true);
            const FWFieldData f = random_fields(rng);
            const ComplexMatrix4 h = fw_hamiltonian2(spec, f);
            comm.observe(commutator(h, gamma(0)).max_abs(), [&] { return ctx_text(spec); });
            block.observe(max_abs_diff(diagonal_block(h, 0), pauli_hamiltonian(spec, f)), [&] { return ctx_text(spec); });
            const ComplexMatrix2 hp = pauli_hamiltonian(spec, f);
            block.observe(max_abs_diff(hp, hp.adjoint()), [&] { return "Pauli Hamiltonian not Hermitian: " + ctx_text(spec); });
        }
    }
}

}  // namespace

PropertyReport run_suite(std::string_view name, std::uint64_t seed, int trials, double tol, const SuiteOptions& options) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string valid;
        for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown suite '" + std::string(name) + "' (valid: " + valid + ")");
    }
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be a positive number");

    PropertyReport report{std::string(name), seed, trials, tol, {}};
    const KernelSet kernels = options.kernels.value_or(KernelSet::standard());
    auto run_one = [&](const std::string& suite, void (*fn)(Run&)) {
        Run run{suite, seed, trials, tol, kernels, &report.properties};
        fn(run);
    };
    const bool all = name == "all";
    if (all || name == "algebra") run_one("algebra", suite_algebra);
    if (all || name == "lorentz") run_one("lorentz", suite_lorentz);
    if (all || name == "invariance") run_one("invariance", suite_invariance);
    if (all || name == "evolution") run_one("evolution", suite_evolution);
    if (all || name == "fw") run_one("fw", suite_fw);
    return report;
}

io::Json report_to_json(const PropertyReport& report) {
    io::Json doc = io::Json::object();
    doc["suite"] = report.suite;
    doc["seed"] = report.seed;
    doc["trials"] = report.trials;
    doc["tolerance"] = report.tolerance;
    doc["passed"] = report.all_passed();
    io::Json props = io::Json::array();
    for (const PropertyResult& p : report.properties) {
        io::Json j = io::Json::object();
        j["suite"] = p.suite;
        j["name"] = p.name;
        j["comparison"] = p.comparison == Comparison::AtMost ? "<=" : ">";
        j["threshold"] = p.threshold;
        j["worst"] = std::isfinite(p.worst) ? io::Json(p.worst) : io::Json(std::signbit(p.worst) ? "-inf" : "inf");
        j["cases"] = p.cases;
        j["passed"] = p.passed;
        if (!p.passed) j["counterexample"] = p.counterexample;
        props.push_back(std::move(j));
    }
    doc["properties"] = std::move(props);
    return doc;
}

}  // namespace dirac::harness
