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

#include "qnl/measures.hpp"

#include <numbers>

namespace qnl {

namespace {

const Matrix4& yy() {
  static const Matrix4 m = kron(pauli::y(), pauli::y());
  return m;
}

const std::array<Matrix4, 9>& pauli_products() {
  static const std::array<Matrix4, 9> ops = [] {
    const auto paulis = pauli::all();
    std::array<Matrix4, 9> out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out[3 * i + j] = kron(paulis[i], paulis[j]);
    return out;
  }();
  return ops;
}

}  // namespace

std::string_view to_string(HierarchyClass c) {
  switch (c) {
    case HierarchyClass::Separable: return "SEPARABLE";
    case HierarchyClass::EntangledOnly: return "ENTANGLED_ONLY";
    case HierarchyClass::TeleportNotBell: return "TELEPORT_NOT_BELL";
    case HierarchyClass::BellNotGisin: return "BELL_NOT_GISIN";
    case HierarchyClass::BeyondGisin: return "BEYOND_GISIN";
  }
  return "UNKNOWN";
}

Matrix4 spin_flip(const DensityMatrix& rho) { return yy() * rho.matrix().conj() * yy(); }

std::array<double, 4> spin_flip_roots(const DensityMatrix& rho) {
  const Matrix4 root = psd_sqrt(rho.matrix());
  return singular_values(root * yy() * root.conj());
}

double concurrence_margin(const DensityMatrix& rho) {
  const auto r = spin_flip_roots(rho);
  return r[0] - r[1] - r[2] - r[3];
}

double concurrence(const DensityMatrix& rho) {
  return std::clamp(concurrence_margin(rho), 0.0, 1.0);
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
  // Tr(rho (A (x) B)) without forming the 4x4 product: the Paulis are
  // monomial matrices, so each trace touches only four entries.
  CorrelationMatrix out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix4& op = pauli_products()[3 * i + j];
      complex tr = 0.0;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (op(c, r) != complex{}) tr += rho(r, c) * op(c, r);
      out.t[i][j] = tr.real();
    }
  }
  return out;
}

std::array<double, 3> correlation_singular_values(const CorrelationMatrix& t) {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = t(i, j);
  return singular_values(m);
}

double n_value(const DensityMatrix& rho) {
  const auto s = correlation_singular_values(correlation_matrix(rho));
  return s[0] + s[1] + s[2];
}

double fidelity(const DensityMatrix& rho) { return 0.5 * (1.0 + n_value(rho) / 3.0); }

double bell_parameter(const DensityMatrix& rho) {
  const auto s = correlation_singular_values(correlation_matrix(rho));
  return 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
}

double gisin_bound() {
  return 0.5 + std::sqrt(1.5) * std::atan(std::numbers::sqrt2) / std::numbers::pi;
}

HierarchyClass classify_values(double concurrence, double fidelity, double bell, double eps) {
  if (concurrence <= eps) return HierarchyClass::Separable;
  if (fidelity <= kClassicalFidelity + eps) return HierarchyClass::EntangledOnly;
  if (bell <= kBellBound + eps) return HierarchyClass::TeleportNotBell;
  if (fidelity <= gisin_bound() + eps) return HierarchyClass::BellNotGisin;
  return HierarchyClass::BeyondGisin;
}

MeasureReport classify(const DensityMatrix& rho, double eps) {
  const auto s = correlation_singular_values(correlation_matrix(rho));
  MeasureReport r;
  r.concurrence = concurrence(rho);
  r.n_value = s[0] + s[1] + s[2];
  r.fidelity = 0.5 * (1.0 + r.n_value / 3.0);
  r.bell = 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
  r.hierarchy_class = classify_values(r.concurrence, r.fidelity, r.bell, eps);
  return r;
}

}  // namespace qnl
