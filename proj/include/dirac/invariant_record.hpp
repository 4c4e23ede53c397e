// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dirac/types.hpp"

#include <array>
#include <string_view>

namespace dirac {

enum class InvariantId { I1, I2, I2A, I2B, I3 };

inline constexpr std::array<InvariantId, 5> kAllInvariants{InvariantId::I1, InvariantId::I2, InvariantId::I2A,
                                                           InvariantId::I2B, InvariantId::I3};

[[nodiscard]] constexpr std::string_view to_string(InvariantId id) {
    switch (id) {
        case InvariantId::I1: return "i1";
        case InvariantId::I2: return "i2";
        case InvariantId::I2A: return "i2a";
        case InvariantId::I2B: return "i2b";
        case InvariantId::I3: return "i3";
    }
    return "?";
}

/// Degree-2 invariants i1, i2, i2a, i2b and the degree-4 invariant i3.
struct InvariantRecord {
    Complex i1{};
    Complex i2{};
    Complex i2a{};
    Complex i2b{};
    Complex i3{};

    [[nodiscard]] Complex operator[](InvariantId id) const {
        switch (id) {
            case InvariantId::I1: return i1;
            case InvariantId::I2: return i2;
            case InvariantId::I2A: return i2a;
            case InvariantId::I2B: return i2b;
            case InvariantId::I3: return i3;
        }
        return {};
    }
};

/// Documented absolute values, as stored in the example-state catalog.
struct InvariantMagnitudes {
    double i1 = 0.0;
    double i2 = 0.0;
    double i2a = 0.0;
    double i2b = 0.0;
    double i3 = 0.0;

    [[nodiscard]] double operator[](InvariantId id) const {
        switch (id) {
            case InvariantId::I1: return i1;
            case InvariantId::I2: return i2;
            case InvariantId::I2A: return i2a;
            case InvariantId::I2B: return i2b;
            case InvariantId::I3: return i3;
        }
        return 0.0;
    }
};

}  // namespace dirac
