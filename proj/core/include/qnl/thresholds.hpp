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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qnl/channels.hpp"
#include "qnl/measures.hpp"
#include "qnl/states.hpp"
#include "qnl/werner_oracle.hpp"

namespace qnl {

/// Correlation orders, strongest first. A measure is "alive" while:
///   Gisin        F > F_lhv
///   Bell         B > 2
///   Fidelity     F > 2/3
///   Concurrence  C > 0
enum class Measure { Gisin, Bell, Fidelity, Concurrence };

std::string_view to_string(Measure m);

/// Critical channel strengths. Zero means the correlation was absent from the
/// start; nullopt means it survives every q < 1.
struct ThresholdSet {
  std::optional<double> q_g;
  std::optional<double> q_b;
  std::optional<double> q_f;
  std::optional<double> q_c;

  std::optional<double>& operator[](Measure m);
  const std::optional<double>& operator[](Measure m) const;
};

/// Whether `m` is alive for a state with the given report values.
bool is_alive(Measure m, const MeasureReport& r);

/// Evaluates `m` alive/dead directly on apply(rho, family(q), B).
bool alive_at(const DensityMatrix& rho, ChannelFamily family, Measure m, double q);

/// Smallest q in [0, 1] at which `m` stops being alive on the B-side channel
/// output, to within `tol`.
///
/// The curve is pre-scanned on 1001 points of [0, 1 - tol] to bracket the
/// first failure, which is then refined by bisection. Measure curves are not
/// assumed monotone. Throws InvalidTolerance unless 0 < tol <= 1e-3.
std::optional<double> critical_q(const DensityMatrix& rho, ChannelFamily family, Measure m,
                                 double tol = 1e-9);

/// All four critical strengths from one shared pre-scan.
ThresholdSet threshold_set(const DensityMatrix& rho, ChannelFamily family, double tol = 1e-9);

/// q_G <= q_B <= q_F <= q_C up to `slack`, absent values counting as +inf.
bool hierarchy_check(const ThresholdSet& ts, double slack = 1e-6);

enum class RegionLabel { R1, R2, R3, R4, R5 };

std::string_view to_string(RegionLabel r);

/// R1..R5 correspond one-to-one to Separable..BeyondGisin.
RegionLabel region_of(HierarchyClass c);

/// Region of a Werner/amplitude-damping point computed from the closed forms.
RegionLabel werner_region(werner_ad::Point pt, double eps = 1e-9);

struct ScanRow {
  double q;
  double concurrence;
  double fidelity;
  double bell;
};

/// Measures of apply(rho, family(q), B) for each q. The grid must be
/// non-empty, inside [0, 1] and strictly increasing (BadGrid otherwise).
std::vector<ScanRow> scan(const DensityMatrix& rho, ChannelFamily family,
                          std::span<const double> q_grid);

/// Evenly spaced grid of `steps` points from qmin to qmax inclusive.
std::vector<double> linear_grid(double qmin, double qmax, std::size_t steps);

/// Smallest Werner parameter p at which `m` is alive with no noise, located
/// on the matrix pipeline by scan and bisection to within `tol`.
std::optional<double> werner_onset_p(Measure m, double tol = 1e-12);

}  // namespace qnl
