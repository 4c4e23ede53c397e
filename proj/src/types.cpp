// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirac/types.hpp"

#include "dirac/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dirac {

// ---------------------------------------------------------------------------
// ComplexVector4
// ---------------------------------------------------------------------------

ComplexVector4 ComplexVector4::basis(std::size_t j) {
    if (j > 3) throw std::out_of_range("basis index must be in 0..3");
    ComplexVector4 v;
    v.amps[j] = 1.0;
    return v;
}

ComplexVector4& ComplexVector4::operator+=(const ComplexVector4& o) {
    for (std::size_t j = 0; j < 4; ++j) amps[j] += o.amps[j];
    return *this;
}

ComplexVector4& ComplexVector4::operator-=(const ComplexVector4& o) {
    for (std::size_t j = 0; j < 4; ++j) amps[j] -= o.amps[j];
    return *this;
}

ComplexVector4& ComplexVector4::operator*=(Complex s) {
    for (auto& a : amps) a *= s;
    return *this;
}

ComplexVector4 ComplexVector4::conj() const {
    ComplexVector4 v;
    for (std::size_t j = 0; j < 4; ++j) v.amps[j] = std::conj(amps[j]);
    return v;
}

double ComplexVector4::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

bool ComplexVector4::is_finite() const {
    return std::all_of(amps.begin(), amps.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexVector4 operator+(ComplexVector4 a, const ComplexVector4& b) { return a += b; }
ComplexVector4 operator-(ComplexVector4 a, const ComplexVector4& b) { return a -= b; }
ComplexVector4 operator*(Complex s, ComplexVector4 v) { return v *= s; }

Complex dot_conj(const ComplexVector4& psi, const ComplexVector4& phi) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < 4; ++j) s += std::conj(psi[j]) * phi[j];
    return s;
}

Complex dot(const ComplexVector4& psi, const ComplexVector4& phi) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < 4; ++j) s += psi[j] * phi[j];
    return s;
}

// ---------------------------------------------------------------------------
// ComplexMatrix4
// ---------------------------------------------------------------------------

ComplexMatrix4::ComplexMatrix4(std::initializer_list<Complex> row_major) {
    if (row_major.size() != 16) throw std::invalid_argument("ComplexMatrix4 needs exactly 16 entries");
    std::copy(row_major.begin(), row_major.end(), e_.begin());
}

ComplexMatrix4 ComplexMatrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

ComplexMatrix4 ComplexMatrix4::diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
    ComplexMatrix4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

ComplexMatrix4 ComplexMatrix4::from_blocks(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b,
                                           const std::array<Complex, 4>& c, const std::array<Complex, 4>& d) {
    ComplexMatrix4 m;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t col = 0; col < 2; ++col) {
            m(r, col) = a[2 * r + col];
            m(r, col + 2) = b[2 * r + col];
            m(r + 2, col) = c[2 * r + col];
            m(r + 2, col + 2) = d[2 * r + col];
        }
    }
    return m;
}

ComplexMatrix4 ComplexMatrix4::outer(const ComplexVector4& a, const ComplexVector4& b) {
    ComplexMatrix4 m;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) m(j, k) = a[j] * b[k];
    return m;
}

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& o) {
    for (std::size_t i = 0; i < 16; ++i) e_[i] += o.e_[i];
    return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& o) {
    for (std::size_t i = 0; i < 16; ++i) e_[i] -= o.e_[i];
    return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(Complex s) {
    for (auto& x : e_) x *= s;
    return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(const ComplexMatrix4& o) {
    *this = *this * o;
    return *this;
}

ComplexMatrix4 ComplexMatrix4::transpose() const {
    ComplexMatrix4 t;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
    ComplexMatrix4 t;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
}

ComplexMatrix4 ComplexMatrix4::conj() const {
    ComplexMatrix4 t;
    for (std::size_t i = 0; i < 16; ++i) t.e_[i] = std::conj(e_[i]);
    return t;
}

Complex ComplexMatrix4::trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

double ComplexMatrix4::max_abs() const {
    double m = 0.0;
    for (const auto& x : e_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix4::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : e_) s += std::norm(x);
    return std::sqrt(s);
}

bool ComplexMatrix4::is_finite() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix4 operator+(ComplexMatrix4 a, const ComplexMatrix4& b) { return a += b; }
ComplexMatrix4 operator-(ComplexMatrix4 a, const ComplexMatrix4& b) { return a -= b; }
ComplexMatrix4 operator-(ComplexMatrix4 a) { return a *= -1.0; }

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 out;
    kernels::matmul4(a.data(), b.data(), out.data());
    return out;
}

ComplexMatrix4 operator*(Complex s, ComplexMatrix4 a) { return a *= s; }
ComplexMatrix4 operator*(ComplexMatrix4 a, Complex s) { return a *= s; }

ComplexVector4 operator*(const ComplexMatrix4& a, const ComplexVector4& v) {
    ComplexVector4 out;
    for (std::size_t r = 0; r < 4; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < 4; ++c) s += a(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b) { return a * b - b * a; }
ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b) { return a * b + b * a; }

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) { return (a - b).max_abs(); }

bool approx_equal(const ComplexMatrix4& a, const ComplexMatrix4& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

bool approx_equal(const ComplexVector4& a, const ComplexVector4& b, double tol) {
    for (std::size_t j = 0; j < 4; ++j)
        if (std::abs(a[j] - b[j]) > tol) return false;
    return true;
}

Complex determinant(const ComplexMatrix4& a) {
    ComplexMatrix4 m = a;
    Complex det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (m(pivot, col) == Complex{0.0, 0.0}) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < 4; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < 4; ++r) {
            const Complex f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < 4; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

ComplexMatrix4 inverse(const ComplexMatrix4& a) {
    ComplexMatrix4 m = a;
    ComplexMatrix4 inv = ComplexMatrix4::identity();
    const double scale = std::max(a.max_abs(), 1e-300);
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (std::abs(m(pivot, col)) <= 1e-14 * scale) throw std::domain_error("matrix is singular to working precision");
        for (std::size_t c = 0; c < 4; ++c) {
            std::swap(m(pivot, c), m(col, c));
            std::swap(inv(pivot, c), inv(col, c));
        }
        const Complex p = m(col, col);
        for (std::size_t c = 0; c < 4; ++c) {
            m(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col) continue;
            const Complex f = m(r, col);
            for (std::size_t c = 0; c < 4; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// RealMatrix4 / ComplexMatrix2
// ---------------------------------------------------------------------------

RealMatrix4 RealMatrix4::identity() {
    RealMatrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix4 RealMatrix4::transpose() const {
    RealMatrix4 t;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double RealMatrix4::determinant() const {
    ComplexMatrix4 c;
    for (std::size_t i = 0; i < 16; ++i) c.entries()[i] = e[i];
    return dirac::determinant(c).real();
}

RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

ComplexMatrix2 ComplexMatrix2::identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

ComplexMatrix2 ComplexMatrix2::adjoint() const {
    return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}

ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 out;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return out;
}

ComplexMatrix2 operator*(Complex s, const ComplexMatrix2& a) {
    ComplexMatrix2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = s * a.e[i];
    return out;
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

ComplexMatrix2 diagonal_block(const ComplexMatrix4& m, int block) {
    if (block != 0 && block != 1) throw std::out_of_range("diagonal block index must be 0 or 1");
    const std::size_t o = block == 0 ? 0 : 2;
    return {{m(o, o), m(o, o + 1), m(o + 1, o), m(o + 1, o + 1)}};
}

}  // namespace dirac
