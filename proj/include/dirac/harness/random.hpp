// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded samplers for property checks.

#pragma once

#include "dirac/algebra.hpp"
#include "dirac/evolution.hpp"
#include "dirac/lorentz.hpp"
#include "dirac/states.hpp"

#include <cstdint>
#include <random>

namespace dirac::harness {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream id).
[[nodiscard]] Rng make_rng(std::uint64_t seed, std::uint64_t stream);

[[nodiscard]] Complex random_complex(Rng& rng);
[[nodiscard]] Spinor random_spinor(Rng& rng);
/// Gaussian entries scaled to unit norm.
[[nodiscard]] TwoSpinorState random_state(Rng& rng);
/// Gaussian entries times `scale`.
[[nodiscard]] ComplexMatrix4 random_matrix(Rng& rng, double scale = 1.0);
[[nodiscard]] ComplexMatrix4 random_hermitian(Rng& rng, double scale = 1.0);
[[nodiscard]] LorentzParams random_params(Rng& rng, double scale = 0.5);
/// I + 0.5 G with Gaussian G, rescaled to determinant one.
[[nodiscard]] ComplexMatrix4 random_sl4(Rng& rng);
/// Unit state built from chiral projections on both sides.
[[nodiscard]] TwoSpinorState random_weyl_state(Rng& rng, Hand hand_a, Hand hand_b);
/// Mass, momentum and four-potential uniform in modest ranges, no extras.
[[nodiscard]] HamiltonianSpec random_dirac_spec(Rng& rng, bool massive);
/// Random Dirac spec plus a random subset of extra terms.
[[nodiscard]] HamiltonianSpec random_spec(Rng& rng);

}  // namespace dirac::harness
