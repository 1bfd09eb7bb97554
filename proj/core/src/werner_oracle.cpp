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

#include "qnl/werner_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qnl/error.hpp"

namespace qnl::werner_ad {

Point::Point(double p, double q) : p_(p), q_(q) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw ParameterOutOfRange("Werner/channel point must lie in [0,1]^2, got (" +
                              std::to_string(p) + ", " + std::to_string(q) + ")");
}

double concurrence_raw(Point pt) {
  const double p = pt.p();
  const double q = pt.q();
  return p * std::sqrt(1.0 - q) -
         0.5 * std::sqrt((1.0 - p) * (1.0 - q) * (1.0 - p + q + p * q));
}

double concurrence(Point pt) { return std::max(0.0, concurrence_raw(pt)); }

double fidelity(Point pt) {
  const double q = pt.q();
  return (3.0 + (1.0 + 2.0 * std::sqrt(1.0 - q) - q) * pt.p()) / 6.0;
}

BellBranches bell_branches(Point pt) {
  const double p = pt.p();
  const double q = pt.q();
  return {2.0 * std::sqrt(p) * std::sqrt(1.0 - q), 2.0 * p * std::sqrt(2.0 - 3.0 * q + q * q)};
}

double bell(Point pt) {
  const auto b = bell_branches(pt);
  return std::max(b.b1, b.b2);
}

bool bell_b1_dominates(Point pt) {
  const auto b = bell_branches(pt);
  return b.b1 > b.b2;
}

namespace {

// First zero crossing of concurrence_raw on [0, 1), located by a dense scan
// and bisection to machine precision.
std::optional<double> bisect_q_c(double p) {
  constexpr int kScan = 1000;
  constexpr double kEnd = 1.0 - 1e-12;
  auto alive = [p](double q) { return concurrence_raw(Point(p, q)) > 0.0; };
  if (!alive(0.0)) return 0.0;
  double lo = 0.0;
  for (int k = 1; k <= kScan; ++k) {
    const double hi = kEnd * k / kScan;
    if (alive(hi)) {
      lo = hi;
      continue;
    }
    double a = lo;
    double b = hi;
    while (b - a > 1e-15) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      (alive(mid) ? a : b) = mid;
    }
    return 0.5 * (a + b);
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> boundary_q_c(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterOutOfRange("Werner parameter p must lie in [0, 1], got " + std::to_string(p));
  if (p <= 1.0 / 3.0) return 0.0;
  if (p <= 0.5) {
    const double q = (3.0 * p - 1.0) / (1.0 - p);
    if (q >= 0.0 && q <= 1.0 && std::abs(concurrence_raw(Point(p, q))) <= 1e-12) return q;
  }
  return bisect_q_c(p);
}

}  // namespace qnl::werner_ad
