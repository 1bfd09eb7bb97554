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

#include "qnl/thresholds.hpp"

#include <array>
#include <limits>
#include <string>

#include "qnl/error.hpp"

namespace qnl {

namespace {

constexpr int kPrescanIntervals = 1000;

// Concurrence margins below this are rounding noise on separable states.
constexpr double kConcurrenceFloor = 1e-12;

constexpr std::array<Measure, 4> kAllMeasures = {Measure::Gisin, Measure::Bell,
                                                 Measure::Fidelity, Measure::Concurrence};

void check_tolerance(double tol) {
  if (!(tol > 0.0 && tol <= 1e-3))
    throw InvalidTolerance("tolerance must lie in (0, 1e-3], got " + std::to_string(tol));
}

// Evaluates only what the requested measures need: F and B come from the
// correlation matrix, C needs the spin-flip spectrum.
bool evaluate_alive(const DensityMatrix& state, Measure m) {
  if (m == Measure::Concurrence) return concurrence_margin(state) > kConcurrenceFloor;
  const auto s = correlation_singular_values(correlation_matrix(state));
  MeasureReport r;
  r.n_value = s[0] + s[1] + s[2];
  r.fidelity = 0.5 * (1.0 + r.n_value / 3.0);
  r.bell = 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
  return is_alive(m, r);
}

double bisect(const DensityMatrix& rho, ChannelFamily family, Measure m, double lo, double hi,
              double tol) {
  // Invariant: alive at lo, dead at hi.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (alive_at(rho, family, m, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ThresholdSet find_thresholds(const DensityMatrix& rho, ChannelFamily family,
                             std::span<const Measure> wanted, double tol) {
  check_tolerance(tol);
  const double end = 1.0 - tol;
  auto grid_q = [end](int k) { return end * k / kPrescanIntervals; };

  // First pre-scan index at which each measure is dead; -1 while alive.
  std::array<int, 4> first_dead{-1, -1, -1, -1};
  std::array<bool, 4> pending{};
  for (Measure m : wanted) pending[static_cast<std::size_t>(m)] = true;

  for (int k = 0; k <= kPrescanIntervals; ++k) {
    bool any = false;
    for (bool p : pending) any = any || p;
    if (!any) break;
    const DensityMatrix state = apply(rho, make_channel(family, grid_q(k)), ChannelSide::B);
    for (Measure m : kAllMeasures) {
      const auto i = static_cast<std::size_t>(m);
      if (!pending[i] || evaluate_alive(state, m)) continue;
      first_dead[i] = k;
      pending[i] = false;
    }
  }

  ThresholdSet ts;
  for (Measure m : wanted) {
    const int k = first_dead[static_cast<std::size_t>(m)];
    if (k < 0) continue;
    ts[m] = k == 0 ? 0.0 : bisect(rho, family, m, grid_q(k - 1), grid_q(k), tol);
  }
  return ts;
}

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::Gisin: return "GISIN";
    case Measure::Bell: return "BELL";
    case Measure::Fidelity: return "FIDELITY";
    case Measure::Concurrence: return "CONCURRENCE";
  }
  return "UNKNOWN";
}

std::optional<double>& ThresholdSet::operator[](Measure m) {
  switch (m) {
    case Measure::Gisin: return q_g;
    case Measure::Bell: return q_b;
    case Measure::Fidelity: return q_f;
    case Measure::Concurrence: break;
  }
  return q_c;
}

const std::optional<double>& ThresholdSet::operator[](Measure m) const {
  return const_cast<ThresholdSet&>(*this)[m];
}

bool is_alive(Measure m, const MeasureReport& r) {
  switch (m) {
    case Measure::Gisin: return r.fidelity > gisin_bound();
    case Measure::Bell: return r.bell > kBellBound;
    case Measure::Fidelity: return r.fidelity > kClassicalFidelity;
    case Measure::Concurrence: return r.concurrence > kConcurrenceFloor;
  }
  return false;
}

bool alive_at(const DensityMatrix& rho, ChannelFamily family, Measure m, double q) {
  return evaluate_alive(apply(rho, make_channel(family, q), ChannelSide::B), m);
}

std::optional<double> critical_q(const DensityMatrix& rho, ChannelFamily family, Measure m,
                                 double tol) {
  const std::array<Measure, 1> wanted{m};
  return find_thresholds(rho, family, wanted, tol)[m];
}

ThresholdSet threshold_set(const DensityMatrix& rho, ChannelFamily family, double tol) {
  return find_thresholds(rho, family, kAllMeasures, tol);
}

bool hierarchy_check(const ThresholdSet& ts, double slack) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::array<double, 4> q{ts.q_g.value_or(inf), ts.q_b.value_or(inf), ts.q_f.value_or(inf),
                                ts.q_c.value_or(inf)};
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (!(q[i] <= q[i + 1] + slack)) return false;
  return true;
}

std::string_view to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::R1: return "R1";
    case RegionLabel::R2: return "R2";
    case RegionLabel::R3: return "R3";
    case RegionLabel::R4: return "R4";
    case RegionLabel::R5: return "R5";
  }
  return "R?";
}

RegionLabel region_of(HierarchyClass c) {
  switch (c) {
    case HierarchyClass::Separable: return RegionLabel::R1;
    case HierarchyClass::EntangledOnly: return RegionLabel::R2;
    case HierarchyClass::TeleportNotBell: return RegionLabel::R3;
    case HierarchyClass::BellNotGisin: return RegionLabel::R4;
    case HierarchyClass::BeyondGisin: break;
  }
  return RegionLabel::R5;
}

RegionLabel werner_region(werner_ad::Point pt, double eps) {
  return region_of(classify_values(werner_ad::concurrence(pt), werner_ad::fidelity(pt),
                                   werner_ad::bell(pt), eps));
}

std::vector<ScanRow> scan(const DensityMatrix& rho, ChannelFamily family,
                          std::span<const double> q_grid) {
  if (q_grid.empty()) throw BadGrid("q grid is empty");
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!(q_grid[i] >= 0.0 && q_grid[i] <= 1.0))
      throw BadGrid("q grid value outside [0, 1]: " + std::to_string(q_grid[i]));
    if (i > 0 && !(q_grid[i] > q_grid[i - 1]))
      throw BadGrid("q grid must be strictly increasing");
  }
  std::vector<ScanRow> rows;
  rows.reserve(q_grid.size());
  for (double q : q_grid) {
    const MeasureReport r = classify(apply(rho, make_channel(family, q), ChannelSide::B));
    rows.push_back({q, r.concurrence, r.fidelity, r.bell});
  }
  return rows;
}

std::vector<double> linear_grid(double qmin, double qmax, std::size_t steps) {
  if (steps < 2) throw BadGrid("grid needs at least 2 points");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = i + 1 == steps ? qmax : qmin + (qmax - qmin) * static_cast<double>(i) / (steps - 1);
  return grid;
}

std::optional<double> werner_onset_p(Measure m, double tol) {
  if (!(tol > 0.0)) throw InvalidTolerance("tolerance must be positive");
  auto alive = [m](double p) { return evaluate_alive(werner(WernerParams(p)), m); };
  if (alive(0.0)) return 0.0;
  double lo = 0.0;
  for (int k = 1; k <= kPrescanIntervals; ++k) {
    const double hi = static_cast<double>(k) / kPrescanIntervals;
    if (!alive(hi)) {
      lo = hi;
      continue;
    }
    double a = lo;  // dead
    double b = hi;  // alive
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      (alive(mid) ? b : a) = mid;
    }
    return 0.5 * (a + b);
  }
  return std::nullopt;
}

}  // namespace qnl
