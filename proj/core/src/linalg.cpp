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

#include "qnl/linalg.hpp"

#include <numeric>
#include <string>

#include "qnl/error.hpp"

namespace qnl {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kJacobiOffTol = 1e-14;
constexpr double kNegativeClamp = 1e-10;
constexpr double kRelativeRankCutoff = 1e-14;

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Solves t^2 + 2*zeta*t - 1 = 0 for the root of smaller magnitude.
double jacobi_tangent(double zeta) {
  const double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  return zeta >= 0.0 ? t : -t;
}

}  // namespace

template <std::size_t N>
EigenSystem<N> hermitian_eig(const Matrix<N>& h, double require_hermitian_tol) {
  const double defect = hermiticity_defect(h);
  if (!(defect <= require_hermitian_tol))
    throw NotHermitian("matrix is not Hermitian: max |H - H^dagger| = " + std::to_string(defect));

  Matrix<N> a = (h + h.adjoint()) * 0.5;
  Matrix<N> v = Matrix<N>::identity();
  const double threshold = kJacobiOffTol * std::max(1.0, frobenius_norm(a));

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Remove the phase of a(p,q), then apply a real Jacobi rotation.
        const complex phase = a(p, q) / r;
        const double t = jacobi_tangent((a(q, q).real() - a(p, p).real()) / (2.0 * r));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complex gqp = -s * std::conj(phase);
        const complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < N; ++k) {
          const complex akp = a(k, p);
          const complex akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = s * vkp + gqq * vkq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const complex apk = a(p, k);
          const complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& h) {
  const EigenSystem<N> es = hermitian_eig(h);
  const double smallest = es.values[N - 1];
  if (smallest < -kNegativeClamp)
    throw NotPSD("matrix is not positive semidefinite: min eigenvalue = " + std::to_string(smallest));

  const double cutoff = kRelativeRankCutoff * std::max(es.values[0], 0.0);
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double lambda = es.values[k];
    if (lambda <= cutoff) continue;
    const double root = std::sqrt(lambda);
    for (std::size_t r = 0; r < N; ++r) {
      const complex vr = es.vectors(r, k) * root;
      for (std::size_t c = 0; c < N; ++c) out(r, c) += vr * std::conj(es.vectors(c, k));
    }
  }
  return out;
}

template <std::size_t N>
std::array<double, N> singular_values(const Matrix<N>& input) {
  Matrix<N> a = input;
  auto column_dot = [&a](std::size_t i, std::size_t j) {
    complex s = 0.0;
    for (std::size_t r = 0; r < N; ++r) s += std::conj(a(r, i)) * a(r, j);
    return s;
  };

  constexpr double kOrthoTol = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        const double alpha = column_dot(i, i).real();
        const double beta = column_dot(j, j).real();
        const complex gamma = column_dot(i, j);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kOrthoTol * std::sqrt(alpha * beta)) continue;
        rotated = true;

        const complex phase = std::conj(gamma) / g;
        const double t = jacobi_tangent((beta - alpha) / (2.0 * g));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t r = 0; r < N; ++r) {
          const complex ai = a(r, i);
          const complex aj = a(r, j) * phase;
          a(r, i) = c * ai - s * aj;
          a(r, j) = s * ai + c * aj;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, N> sv{};
  for (std::size_t k = 0; k < N; ++k) sv[k] = std::sqrt(column_dot(k, k).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

template EigenSystem<2> hermitian_eig(const Matrix<2>&, double);
template EigenSystem<3> hermitian_eig(const Matrix<3>&, double);
template EigenSystem<4> hermitian_eig(const Matrix<4>&, double);
template Matrix<2> psd_sqrt(const Matrix<2>&);
template Matrix<3> psd_sqrt(const Matrix<3>&);
template Matrix<4> psd_sqrt(const Matrix<4>&);
template std::array<double, 2> singular_values(const Matrix<2>&);
template std::array<double, 3> singular_values(const Matrix<3>&);
template std::array<double, 4> singular_values(const Matrix<4>&);

}  // namespace qnl
