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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "qnl/linalg.hpp"

namespace qnl {

/// Tolerance applied to every density-matrix invariant.
inline constexpr double kStateTol = 1e-10;

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
/// Instances can only be obtained through `validate` or the family
/// constructors below, so holding one means the invariants were checked.
class DensityMatrix {
 public:
  /// Throws NotHermitian, TraceNotOne or NotPSD naming the violated invariant.
  static DensityMatrix validate(const Matrix4& m);

  const Matrix4& matrix() const { return mat_; }
  complex operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  /// Eigenvalues sorted descending.
  std::array<double, 4> eigenvalues() const;

  /// Tr(rho^2).
  double purity() const;

 private:
  explicit DensityMatrix(const Matrix4& m) : mat_(m) {}
  Matrix4 mat_;
};

/// Werner mixing weight p in [0, 1].
class WernerParams {
 public:
  explicit WernerParams(double p);
  double p() const { return p_; }

 private:
  double p_;
};

/// Spectrum of an Ishizaka-Hiroshima maximally entangled mixed state.
///
/// Inputs are sorted descending on construction; they must be non-negative
/// and sum to one within 1e-12.
class MemsWeights {
 public:
  MemsWeights(double w1, double w2, double w3, double w4);
  explicit MemsWeights(const std::array<double, 4>& w) : MemsWeights(w[0], w[1], w[2], w[3]) {}

  const std::array<double, 4>& values() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::array<double, 4> p_;
};

/// |psi-><psi-| with |psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix bell_singlet();

/// (1-p)/4 I + p |psi-><psi-|.
DensityMatrix werner(WernerParams params);

/// p1 |psi-><psi-| + p2 |00><00| + p3 |psi+><psi+| + p4 |11><11|.
DensityMatrix mems(const MemsWeights& w);

// JSON file form: {"re": [[...4]...4], "im": [[...4]...4]}, row-major.
DensityMatrix density_from_json(const std::string& text);
DensityMatrix load_density_json(const std::filesystem::path& path);
std::string density_to_json(const DensityMatrix& rho);

}  // namespace qnl
