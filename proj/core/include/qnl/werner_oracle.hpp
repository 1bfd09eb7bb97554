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

// Published closed forms for a Werner state whose second qubit passes through
// an amplitude-damping channel of strength q. These are evaluated directly
// from the formulas and serve as an oracle independent of the matrix
// pipeline in channels/measures.

#include <optional>

namespace qnl::werner_ad {

/// A point of the (state parameter p, channel strength q) plane.
class Point {
 public:
  /// Throws ParameterOutOfRange unless both coordinates lie in [0, 1].
  Point(double p, double q);
  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_;
  double q_;
};

/// p sqrt(1-q) - 1/2 sqrt((1-p)(1-q)(1-p+q+pq)); may be negative.
double concurrence_raw(Point pt);

/// concurrence_raw clamped at zero.
double concurrence(Point pt);

/// (3 + (1 + 2 sqrt(1-q) - q) p) / 6.
double fidelity(Point pt);

struct BellBranches {
  double b1;  // 2 sqrt(p) sqrt(1-q)
  double b2;  // 2 p sqrt(2 - 3q + q^2)
};

BellBranches bell_branches(Point pt);

/// max(B1, B2) exactly as published.
double bell(Point pt);

/// True where the B1 branch strictly dominates, i.e. p (2 - q) < 1. There the
/// published Bell value departs from the noiseless 2 sqrt(2) p even at q = 0.
bool bell_b1_dominates(Point pt);

/// Smallest q at which the concurrence vanishes: 0 for p <= 1/3,
/// (3p-1)/(1-p) for 1/3 < p <= 1/2, and none above 1/2 where entanglement
/// survives every q < 1.
std::optional<double> boundary_q_c(double p);

}  // namespace qnl::werner_ad
