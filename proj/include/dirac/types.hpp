// Copyright 2026 The dirac-invariants Authors
// SPDX-License-Identifier: Apache-2.0

// Fixed-size complex value types for the 4-dimensional spinor space.
//
// ComplexMatrix4 is stored row-major (entry (r, c) at index 4*r + c).  All
// arithmetic is by value; products go through the runtime-selected kernel in
// kernels.hpp.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace dirac {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

struct ComplexVector4 {
    std::array<Complex, 4> amps{};

    [[nodiscard]] Complex& operator[](std::size_t j) { return amps[j]; }
    [[nodiscard]] const Complex& operator[](std::size_t j) const { return amps[j]; }

    [[nodiscard]] static ComplexVector4 basis(std::size_t j);

    ComplexVector4& operator+=(const ComplexVector4& o);
    ComplexVector4& operator-=(const ComplexVector4& o);
    ComplexVector4& operator*=(Complex s);

    [[nodiscard]] ComplexVector4 conj() const;
    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] bool is_finite() const;

    friend bool operator==(const ComplexVector4&, const ComplexVector4&) = default;
};

[[nodiscard]] ComplexVector4 operator+(ComplexVector4 a, const ComplexVector4& b);
[[nodiscard]] ComplexVector4 operator-(ComplexVector4 a, const ComplexVector4& b);
[[nodiscard]] ComplexVector4 operator*(Complex s, ComplexVector4 v);

/// psi^dagger phi
[[nodiscard]] Complex dot_conj(const ComplexVector4& psi, const ComplexVector4& phi);
/// psi^T phi (no conjugation)
[[nodiscard]] Complex dot(const ComplexVector4& psi, const ComplexVector4& phi);

class ComplexMatrix4 {
public:
    ComplexMatrix4() = default;
    /// Row-major list of 16 entries.
    ComplexMatrix4(std::initializer_list<Complex> row_major);

    [[nodiscard]] static ComplexMatrix4 zero() { return {}; }
    [[nodiscard]] static ComplexMatrix4 identity();
    [[nodiscard]] static ComplexMatrix4 diagonal(Complex d0, Complex d1, Complex d2, Complex d3);
    /// Block matrix [[a, b], [c, d]] from 2x2 row-major blocks.
    [[nodiscard]] static ComplexMatrix4 from_blocks(const std::array<Complex, 4>& a,
                                                    const std::array<Complex, 4>& b,
                                                    const std::array<Complex, 4>& c,
                                                    const std::array<Complex, 4>& d);
    /// out(j, k) = a_j b_k
    [[nodiscard]] static ComplexMatrix4 outer(const ComplexVector4& a, const ComplexVector4& b);

    [[nodiscard]] Complex& operator()(std::size_t r, std::size_t c) { return e_[4 * r + c]; }
    [[nodiscard]] const Complex& operator()(std::size_t r, std::size_t c) const { return e_[4 * r + c]; }

    [[nodiscard]] std::span<Complex, 16> entries() { return e_; }
    [[nodiscard]] std::span<const Complex, 16> entries() const { return e_; }
    [[nodiscard]] Complex* data() { return e_.data(); }
    [[nodiscard]] const Complex* data() const { return e_.data(); }

    ComplexMatrix4& operator+=(const ComplexMatrix4& o);
    ComplexMatrix4& operator-=(const ComplexMatrix4& o);
    ComplexMatrix4& operator*=(Complex s);
    ComplexMatrix4& operator*=(const ComplexMatrix4& o);

    [[nodiscard]] ComplexMatrix4 transpose() const;
    [[nodiscard]] ComplexMatrix4 adjoint() const;
    [[nodiscard]] ComplexMatrix4 conj() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] bool is_finite() const;

    friend bool operator==(const ComplexMatrix4&, const ComplexMatrix4&) = default;

private:
    std::array<Complex, 16> e_{};
};

[[nodiscard]] ComplexMatrix4 operator+(ComplexMatrix4 a, const ComplexMatrix4& b);
[[nodiscard]] ComplexMatrix4 operator-(ComplexMatrix4 a, const ComplexMatrix4& b);
[[nodiscard]] ComplexMatrix4 operator-(ComplexMatrix4 a);
[[nodiscard]] ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);
[[nodiscard]] ComplexMatrix4 operator*(Complex s, ComplexMatrix4 a);
[[nodiscard]] ComplexMatrix4 operator*(ComplexMatrix4 a, Complex s);
[[nodiscard]] ComplexVector4 operator*(const ComplexMatrix4& a, const ComplexVector4& v);

/// Commutator ab - ba.
[[nodiscard]] ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b);
/// Anticommutator ab + ba.
[[nodiscard]] ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Largest entrywise |a - b|.
[[nodiscard]] double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
/// Entrywise absolute comparison.
[[nodiscard]] bool approx_equal(const ComplexMatrix4& a, const ComplexMatrix4& b, double tol);
[[nodiscard]] bool approx_equal(const ComplexVector4& a, const ComplexVector4& b, double tol);

/// Determinant by partially pivoted elimination.
[[nodiscard]] Complex determinant(const ComplexMatrix4& a);
/// Inverse by Gauss-Jordan elimination; throws std::domain_error when singular.
[[nodiscard]] ComplexMatrix4 inverse(const ComplexMatrix4& a);

/// Real 4x4 matrix, row-major; used for the vector representation of the Lorentz group.
struct RealMatrix4 {
    std::array<double, 16> e{};

    [[nodiscard]] double& operator()(std::size_t r, std::size_t c) { return e[4 * r + c]; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return e[4 * r + c]; }
    [[nodiscard]] static RealMatrix4 identity();
    [[nodiscard]] RealMatrix4 transpose() const;
    [[nodiscard]] double determinant() const;
};

[[nodiscard]] RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b);
[[nodiscard]] double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b);

/// 2x2 complex matrix, row-major; Pauli matrices and the Pauli Hamiltonian.
struct ComplexMatrix2 {
    std::array<Complex, 4> e{};

    [[nodiscard]] Complex& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }
    [[nodiscard]] const Complex& operator()(std::size_t r, std::size_t c) const { return e[2 * r + c]; }
    [[nodiscard]] static ComplexMatrix2 identity();
    [[nodiscard]] ComplexMatrix2 adjoint() const;
};

[[nodiscard]] ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
[[nodiscard]] ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b);
[[nodiscard]] ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
[[nodiscard]] ComplexMatrix2 operator*(Complex s, const ComplexMatrix2& a);
[[nodiscard]] double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// Upper-left (block 0) or lower-right (block 1) 2x2 diagonal block.
[[nodiscard]] ComplexMatrix2 diagonal_block(const ComplexMatrix4& m, int block);

}  // namespace dirac
