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

// Test-only generators and oracles. Nothing here calls into the measure or
// channel code it is used to check.

#include <cmath>
#include <numbers>
#include <random>

#include "qnl/linalg.hpp"
#include "qnl/states.hpp"

namespace qnl::testing {

inline complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  return {re, g(rng)};
}

template <std::size_t N>
Matrix<N> random_matrix(std::mt19937_64& rng) {
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = random_complex(rng);
  return m;
}

template <std::size_t N>
Matrix<N> random_hermitian(std::mt19937_64& rng) {
  const Matrix<N> g = random_matrix<N>(rng);
  return (g + g.adjoint()) * 0.5;
}

/// G G^dagger / Tr with G a 4 x rank Gaussian matrix; rank 1..4.
inline Matrix4 random_density_matrix(std::mt19937_64& rng, std::size_t rank) {
  Matrix4 g;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = random_complex(rng);
  Matrix4 rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return (rho + rho.adjoint()) * 0.5;
}

/// Random state with rank drawn uniformly from 1..4.
inline DensityMatrix random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rank(1, 4);
  return DensityMatrix::validate(random_density_matrix(rng, rank(rng)));
}

/// rho^{T_B}: transpose on the second qubit only.
inline Matrix4 partial_transpose_b(const Matrix4& rho) {
  Matrix4 out;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t b2 = 0; b2 < 2; ++b2)
          out(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
  return out;
}

/// Entries of a 2x2 Kronecker product written out by hand.
inline Matrix4 kron_by_hand(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) * b(0, 0), a(0, 0) * b(0, 1), a(0, 1) * b(0, 0), a(0, 1) * b(0, 1),
          a(0, 0) * b(1, 0), a(0, 0) * b(1, 1), a(0, 1) * b(1, 0), a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0), a(1, 0) * b(0, 1), a(1, 1) * b(0, 0), a(1, 1) * b(0, 1),
          a(1, 0) * b(1, 0), a(1, 0) * b(1, 1), a(1, 1) * b(1, 0), a(1, 1) * b(1, 1)};
}

inline double gisin_closed_form() {
  return 0.5 + std::sqrt(1.5) * std::atan(std::sqrt(2.0)) / std::numbers::pi;
}

/// Root of (3 + 2s + s^2)/6 = F_lhv with s = sqrt(1-q): Bell state through
/// amplitude damping reaches the Gisin bound here.
inline double bell_q_gisin_closed_form() {
  const double s = -1.0 + std::sqrt(6.0 * gisin_closed_form() - 2.0);
  return 1.0 - s * s;
}

/// Numeric Bell parameter of a Werner state after amplitude damping on B.
/// The correlation matrix is diag(-p r, -p r, -p r^2) with r = sqrt(1-q), so
/// the two largest eigenvalues of T^T T are both p^2 (1-q).
inline double werner_ad_bell_from_correlations(double p, double q) {
  return 2.0 * std::sqrt(2.0) * p * std::sqrt(1.0 - q);
}

}  // namespace qnl::testing
