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

// Nonlocal-correlation measures of two-qubit states, ordered from weakest to
// strongest: entanglement (concurrence), usefulness for teleportation
// (fidelity above 2/3), Bell-CHSH violation (B above 2) and incompatibility
// with local hidden variables (fidelity above the Gisin bound).

#include <array>
#include <string_view>

#include "qnl/linalg.hpp"
#include "qnl/states.hpp"

namespace qnl {

/// t[i][j] = Tr(rho sigma_i (x) sigma_j), i, j over x, y, z.
struct CorrelationMatrix {
  std::array<std::array<double, 3>, 3> t{};

  double operator()(std::size_t i, std::size_t j) const { return t[i][j]; }
};

enum class HierarchyClass {
  Separable,
  EntangledOnly,
  TeleportNotBell,
  BellNotGisin,
  BeyondGisin,
};

std::string_view to_string(HierarchyClass c);

struct MeasureReport {
  double concurrence = 0.0;
  double n_value = 0.0;
  double fidelity = 0.5;
  double bell = 0.0;
  HierarchyClass hierarchy_class = HierarchyClass::Separable;
};

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
Matrix4 spin_flip(const DensityMatrix& rho);

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
///
/// Obtained as singular values of sqrt(rho) (sigma_y (x) sigma_y) sqrt(rho)*,
/// whose Gram matrix sqrt(rho) rho~ sqrt(rho) is Hermitian and similar to
/// rho rho~. This keeps the roots of vanishing eigenvalues at machine
/// precision instead of sqrt(machine precision).
std::array<double, 4> spin_flip_roots(const DensityMatrix& rho);

/// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) before clamping at zero.
double concurrence_margin(const DensityMatrix& rho);

double concurrence(const DensityMatrix& rho);

CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

/// Singular values of T, descending; their squares are the eigenvalues of T^T T.
std::array<double, 3> correlation_singular_values(const CorrelationMatrix& t);

double n_value(const DensityMatrix& rho);

/// Optimal teleportation fidelity (1 + N/3)/2.
double fidelity(const DensityMatrix& rho);

/// Maximal Bell-CHSH value 2 sqrt(v1 + v2) over the two largest
/// eigenvalues of T^T T.
double bell_parameter(const DensityMatrix& rho);

/// 1/2 + sqrt(3/2) arctan(sqrt(2)) / pi.
double gisin_bound();

/// Teleportation fidelity threshold for quantum advantage.
inline constexpr double kClassicalFidelity = 2.0 / 3.0;

/// Local-realist CHSH bound.
inline constexpr double kBellBound = 2.0;

/// Classifies a set of measure values; boundary values fall into the lower
/// class.
HierarchyClass classify_values(double concurrence, double fidelity, double bell, double eps = 1e-9);

/// All measures from one evaluation of rho, plus the hierarchy class.
MeasureReport classify(const DensityMatrix& rho, double eps = 1e-9);

}  // namespace qnl
