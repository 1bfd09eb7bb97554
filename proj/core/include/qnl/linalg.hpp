// Copyright 2026 The qnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Fixed-size dense complex linear algebra for 2x2, 3x3 and 4x4 matrices.
//
// Two-qubit basis order is |00>, |01>, |10>, |11>; the first label is
// qubit A, the second qubit B.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace qnl {

using complex = std::complex<double>;

template <std::size_t N>
class Matrix {
  static_assert(N >= 2 && N <= 4, "only 2x2, 3x3 and 4x4 matrices are supported");

 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  /// Row-major initialization; missing trailing entries are zero.
  Matrix(std::initializer_list<complex> entries) {
    std::copy_n(entries.begin(), std::min(entries.size(), N * N), data_.begin());
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Matrix conj() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  complex trace() const {
    complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, complex s) { return a *= s; }
  friend Matrix operator*(complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const complex ark = a(r, k);
        if (ark == complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<complex, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix3 = Matrix<3>;
using Matrix4 = Matrix<4>;

/// Largest elementwise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

/// Largest elementwise modulus of H - H^dagger.
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& h) {
  return max_abs_diff(h, h.adjoint());
}

/// Eigenvalues sorted descending with matching unitary eigenvector columns.
template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};
  Matrix<N> vectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NotHermitian if the input deviates from its adjoint by more than
/// `require_hermitian_tol` in any entry.
template <std::size_t N>
EigenSystem<N> hermitian_eig(const Matrix<N>& h, double require_hermitian_tol = 1e-10);

/// Principal square root of a positive semidefinite Hermitian matrix.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero, as are positive eigenvalues
/// below 1e-14 relative to the largest one (numerically indistinguishable from
/// zero). Throws NotPSD for anything more negative.
template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& h);

/// Singular values, descending, by one-sided Jacobi orthogonalization of the
/// columns. Small singular values keep absolute accuracy near machine epsilon,
/// unlike square roots of Gram-matrix eigenvalues.
template <std::size_t N>
std::array<double, N> singular_values(const Matrix<N>& a);

/// Kronecker product A (x) B with A acting on the first tensor factor.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

namespace pauli {

inline Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 y() { return {0.0, complex{0.0, -1.0}, complex{0.0, 1.0}, 0.0}; }
inline Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }

/// sigma_x, sigma_y, sigma_z in that order.
inline std::array<Matrix2, 3> all() { return {x(), y(), z()}; }

}  // namespace pauli

}  // namespace qnl
