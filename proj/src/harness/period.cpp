// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/harness/period.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dirac::harness {

std::string_view to_string(PeriodStatus s) {
    return s == PeriodStatus::Periodic ? "periodic" : "aperiodic/constant";
}

namespace {

constexpr int kMaxHarmonics = 16;
constexpr int kMaxSubharmonic = 4;
constexpr int kGoldenIterations = 80;

struct Model {
    const Eigen::VectorXd& y;
    double dt;
    int harmonics;
    double y_norm;

    // Residual norm of the best truncated Fourier series at angular frequency w.
    [[nodiscard]] double residual(double w) const {
        const Eigen::Index n = y.size();
        Eigen::MatrixXd x(n, 1 + 2 * harmonics);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) * dt;
            x(i, 0) = 1.0;
            for (int h = 1; h <= harmonics; ++h) {
                x(i, 2 * h - 1) = std::cos(h * w * t);
                x(i, 2 * h) = std::sin(h * w * t);
            }
        }
        const Eigen::VectorXd beta = x.colPivHouseholderQr().solve(y);
        return (y - x * beta).norm() / y_norm;
    }
};

struct Refined {
    double w;
    double residual;
};

Refined golden_section(const Model& m, double lo, double hi) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = m.residual(c);
    double fd = m.residual(d);
    for (int it = 0; it < kGoldenIterations && b - a > 1e-15 * std::abs(b); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = m.residual(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = m.residual(d);
        }
    }
    return fc < fd ? Refined{c, fc} : Refined{d, fd};
}

double dominant_angular_frequency(const std::vector<double>& centered, double dt) {
    const std::size_t n = centered.size();
    std::size_t padded = 1;
    while (padded < 16 * n) padded <<= 1;
    std::vector<double> buf(padded, 0.0);
    std::copy(centered.begin(), centered.end(), buf.begin());
    std::vector<std::complex<double>> spec;
    Eigen::FFT<double> fft;
    fft.fwd(spec, buf);

    std::size_t peak = 1;
    for (std::size_t j = 2; j < padded / 2; ++j) {
        if (std::abs(spec[j]) > std::abs(spec[peak])) peak = j;
    }
    double offset = 0.0;
    if (peak + 1 < padded / 2) {
        const double a = std::abs(spec[peak - 1]);
        const double b = std::abs(spec[peak]);
        const double c = std::abs(spec[peak + 1]);
        const double denom = a - 2.0 * b + c;
        if (denom != 0.0) offset = 0.5 * (a - c) / denom;
    }
    return 2.0 * std::numbers::pi * (static_cast<double>(peak) + offset) / (static_cast<double>(padded) * dt);
}

}  // namespace

PeriodFit fit_period(std::span<const double> samples, double dt) {
    if (samples.size() < 64) throw std::invalid_argument("fit_period: need at least 64 samples");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("fit_period: dt must be positive");
    for (double v : samples) {
        if (!std::isfinite(v)) throw std::invalid_argument("fit_period: non-finite sample");
    }

    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    const double scale = std::max({1.0, std::abs(*mn), std::abs(*mx)});
    if (*mx - *mn <= 1e-12 * scale) return {PeriodStatus::Constant, std::numeric_limits<double>::infinity(), 0.0, 0, 1};

    const std::size_t n = samples.size();
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = samples[i] - mean;

    const double w0 = dominant_angular_frequency(centered, dt);
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(samples.data(), static_cast<Eigen::Index>(n));
    const double y_norm = Eigen::Map<const Eigen::VectorXd>(centered.data(), static_cast<Eigen::Index>(n)).norm();
    const double bin = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    const double nyquist = std::numbers::pi / dt;

    struct Candidate {
        int k;
        int harmonics;
        Refined fit;
    };
    std::vector<Candidate> candidates;
    for (int k = 1; k <= kMaxSubharmonic; ++k) {
        const double w = w0 / k;
        // Stay below Nyquist and keep the system well overdetermined.
        const int by_nyquist = static_cast<int>(std::floor(0.9 * nyquist / w));
        const int by_size = static_cast<int>((n - 1) / 4);
        const int harmonics = std::min({kMaxHarmonics, by_nyquist, by_size});
        if (harmonics < 1) continue;
        const Model model{y, dt, harmonics, y_norm};
        const double half_width = 0.5 * bin / k;
        candidates.push_back({k, harmonics, golden_section(model, std::max(1e-3 * w, w - half_width), w + half_width)});
    }
    if (candidates.empty()) throw std::invalid_argument("fit_period: dominant frequency at Nyquist");

    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) best = std::min(best, c.fit.residual);
    // The smallest subharmonic that explains the data as well as any other.
    for (const auto& c : candidates) {
        if (c.fit.residual <= std::max(1e-6, 10.0 * best)) {
            return {PeriodStatus::Periodic, 2.0 * std::numbers::pi / c.fit.w, c.fit.residual, c.harmonics, c.k};
        }
    }
    return {};  // unreachable
}

}  // namespace dirac::harness
