// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Conversions to Eigen, used as the independent oracle in tests.
#pragma once

#include "dirac/types.hpp"

#include <Eigen/Dense>

namespace dirac::test {

using EMat = Eigen::Matrix4cd;

inline EMat to_eigen(const ComplexMatrix4& m) {
    EMat out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = m(r, c);
    return out;
}

inline ComplexMatrix4 from_eigen(const EMat& m) {
    ComplexMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = m(r, c);
    return out;
}

inline double max_abs_diff(const ComplexMatrix4& a, const EMat& b) {
    return (to_eigen(a) - b).cwiseAbs().maxCoeff();
}

}  // namespace dirac::test
