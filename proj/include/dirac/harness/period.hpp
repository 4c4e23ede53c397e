// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Fundamental-period estimation for uniformly sampled real series.
//
// A zero-padded periodogram gives the dominant frequency.  The fundamental is
// then searched among its subharmonics w/k (k = 1..4) by least-squares fits
// of a truncated Fourier series, with the frequency refined by golden-section
// search on the fit residual.

#pragma once

#include <span>
#include <string_view>

namespace dirac::harness {

enum class PeriodStatus { Periodic, Constant };

[[nodiscard]] std::string_view to_string(PeriodStatus s);

struct PeriodFit {
    PeriodStatus status = PeriodStatus::Constant;
    double period = 0.0;             ///< +inf for constant series
    double relative_residual = 0.0;  ///< ||y - fit|| / ||y - mean||
    int harmonics = 0;
    int subharmonic = 1;             ///< k with period = k * (dominant period)
};

/// Requires at least 64 samples and dt > 0 (std::invalid_argument otherwise).
/// A series whose spread is below 1e-12 (relative to its magnitude) is
/// reported as constant.
[[nodiscard]] PeriodFit fit_period(std::span<const double> samples, double dt);

}  // namespace dirac::harness
