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

#include <doctest.h>

#include <map>

#include "qnl/error.hpp"
#include "qnl/sampling.hpp"
#include "qnl/thresholds.hpp"
#include "support.hpp"

using namespace qnl;

namespace {

constexpr auto AD = ChannelFamily::AmplitudeDamping;

constexpr std::array<ChannelFamily, 3> kFamilies = {
    ChannelFamily::AmplitudeDamping, ChannelFamily::PhaseDamping, ChannelFamily::Depolarizing};

constexpr std::array<Measure, 4> kMeasures = {Measure::Gisin, Measure::Bell, Measure::Fidelity,
                                              Measure::Concurrence};

}  // namespace

TEST_SUITE("thresholds") {
  TEST_CASE("Bell singlet under amplitude damping") {
    const DensityMatrix bell = bell_singlet();

    // B = 2 sqrt(2) sqrt(1-q) on the matrix pipeline, so B = 2 at q = 1/2.
    const auto q_b = critical_q(bell, AD, Measure::Bell);
    REQUIRE(q_b.has_value());
    CHECK(std::abs(*q_b - 0.5) <= 1e-6);

    // F = 2/3 where 2 sqrt(1-q) = q.
    const auto q_f = critical_q(bell, AD, Measure::Fidelity);
    REQUIRE(q_f.has_value());
    CHECK(std::abs(*q_f - (2 * std::sqrt(2.0) - 2)) <= 1e-6);

    const auto q_g = critical_q(bell, AD, Measure::Gisin);
    REQUIRE(q_g.has_value());
    CHECK(std::abs(*q_g - testing::bell_q_gisin_closed_form()) <= 1e-6);
    CHECK(std::abs(*q_g - 0.3624) <= 1e-4);

    CHECK_FALSE(critical_q(bell, AD, Measure::Concurrence).has_value());
  }

  TEST_CASE("threshold_set bundles the individual searches") {
    const DensityMatrix bell = bell_singlet();
    const ThresholdSet ts = threshold_set(bell, AD, 1e-9);
    for (Measure m : kMeasures) {
      const auto single = critical_q(bell, AD, m, 1e-9);
      REQUIRE(ts[m].has_value() == single.has_value());
      if (single) CHECK(*ts[m] == *single);
    }
    CHECK(hierarchy_check(ts));
  }

  TEST_CASE("dead-at-start convention") {
    const ThresholdSet w = threshold_set(werner(WernerParams(0.5)), AD, 1e-9);
    CHECK(w.q_b == 0.0);
    CHECK(w.q_g == 0.0);

    const DensityMatrix mixed = werner(WernerParams(0.0));
    for (ChannelFamily f : kFamilies) {
      const ThresholdSet ts = threshold_set(mixed, f, 1e-6);
      for (Measure m : kMeasures) CHECK(ts[m] == 0.0);
      CHECK(hierarchy_check(ts));
    }
  }

  TEST_CASE("invalid tolerances") {
    CHECK_THROWS_AS(critical_q(bell_singlet(), AD, Measure::Bell, 0.0), InvalidTolerance);
    CHECK_THROWS_AS(critical_q(bell_singlet(), AD, Measure::Bell, 0.01), InvalidTolerance);
    CHECK_THROWS_AS(threshold_set(bell_singlet(), AD, -1.0), InvalidTolerance);
    CHECK_NOTHROW(critical_q(bell_singlet(), AD, Measure::Bell, 1e-3));
  }

  TEST_CASE("hierarchy_check examples") {
    CHECK(hierarchy_check({0.36, 0.38, 0.83, std::nullopt}));
    CHECK(hierarchy_check({0.0, 0.0, 0.0, 0.0}));
    CHECK_FALSE(hierarchy_check({0.5, 0.4, 0.9, 1.0}));
    CHECK_FALSE(hierarchy_check({0.2, std::nullopt, 0.5, 0.6}));
    CHECK(hierarchy_check({0.2, 0.3, std::nullopt, std::nullopt}));
    CHECK(hierarchy_check({0.3, 0.3 - 5e-7, 0.4, 0.5}));
    CHECK_FALSE(hierarchy_check({0.3, 0.3 - 5e-6, 0.4, 0.5}));
  }

  TEST_CASE("bisection brackets each threshold") {
    const double tol = 1e-9;
    std::vector<DensityMatrix> states{bell_singlet(), werner(WernerParams(0.8)),
                                      werner(WernerParams(0.95))};
    Rng rng(5);
    for (int i = 0; i < 6; ++i) states.push_back(mems(sample_weights(rng)));

    for (const DensityMatrix& rho : states) {
      for (ChannelFamily f : kFamilies) {
        const ThresholdSet ts = threshold_set(rho, f, tol);
        for (Measure m : kMeasures) {
          if (!ts[m] || *ts[m] == 0.0) continue;
          CHECK(alive_at(rho, f, m, *ts[m] - 2 * tol));
          CHECK_FALSE(alive_at(rho, f, m, std::min(1.0, *ts[m] + 2 * tol)));
        }
      }
    }
  }

  TEST_CASE("hierarchy holds for the Bell and Werner families under every channel") {
    for (ChannelFamily f : kFamilies) {
      CHECK(hierarchy_check(threshold_set(bell_singlet(), f, 1e-9)));
      for (double p : {0.75, 0.8, 0.9, 1.0})
        CHECK(hierarchy_check(threshold_set(werner(WernerParams(p)), f, 1e-9)));
    }
  }

  TEST_CASE("werner_region examples") {
    CHECK(werner_region(werner_ad::Point(0.2, 0.5)) == RegionLabel::R1);
    CHECK(werner_region(werner_ad::Point(1.0, 0.0)) == RegionLabel::R5);
    CHECK(werner_region(werner_ad::Point(1.0, 0.5)) == RegionLabel::R3);
    CHECK(to_string(RegionLabel::R4) == "R4");
  }

  TEST_CASE("region label never increases with q") {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      int prev = 5;
      for (int j = 0; j <= 100; ++j) {
        const int label = static_cast<int>(werner_region(werner_ad::Point(p, j / 100.0)));
        REQUIRE(label <= prev);
        prev = label;
      }
    }
  }

  TEST_CASE("analytic and numeric region maps differ only where the Bell forms disagree") {
    // The printed Bell closed form and the matrix pipeline disagree for q > 0,
    // so R3/R4 can swap; every other label must coincide.
    std::map<std::pair<RegionLabel, RegionLabel>, int> mismatches;
    for (int i = 0; i < 25; ++i) {
      for (int j = 0; j < 25; ++j) {
        const double p = i / 24.0;
        const double q = j / 24.0;
        const werner_ad::Point pt(p, q);
        const RegionLabel analytic = werner_region(pt);
        const RegionLabel from_matrix = region_of(
            classify(apply(werner(WernerParams(p)), make_channel(AD, q))).hierarchy_class);
        if (analytic == from_matrix) continue;
        ++mismatches[{analytic, from_matrix}];
        const double numeric_bell = testing::werner_ad_bell_from_correlations(p, q);
        CHECK((werner_ad::bell(pt) > 2.0) != (numeric_bell > 2.0));
        CHECK(werner_ad::fidelity(pt) > 2.0 / 3.0);
      }
    }
    for (const auto& [labels, count] : mismatches) {
      MESSAGE("analytic " << to_string(labels.first) << " vs numeric " << to_string(labels.second)
                          << ": " << count << " points");
      const bool bell_swap = (labels.first == RegionLabel::R3 || labels.first == RegionLabel::R4) &&
                             (labels.second == RegionLabel::R3 || labels.second == RegionLabel::R4);
      CHECK(bell_swap);
    }
  }

  TEST_CASE("scan examples") {
    const std::array<double, 1> zero{0.0};
    const auto r0 = scan(bell_singlet(), AD, zero);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].concurrence == doctest::Approx(1.0));
    CHECK(r0[0].fidelity == doctest::Approx(1.0));
    CHECK(r0[0].bell == doctest::Approx(2 * std::sqrt(2.0)));

    // q = 1 leaves (I/2) (x) |0><0|: no correlations at all.
    const std::array<double, 1> one{1.0};
    const auto r1 = scan(bell_singlet(), AD, one);
    CHECK(r1[0].concurrence == 0.0);
    CHECK(r1[0].fidelity == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(r1[0].bell) <= 1e-14);

    const auto grid = linear_grid(0.0, 1.0, 11);
    const auto rows = scan(werner(WernerParams(0.8)), AD, grid);
    REQUIRE(rows.size() == 11);
    for (const auto& row : rows) {
      const werner_ad::Point pt(0.8, row.q);
      CHECK(std::abs(row.concurrence - werner_ad::concurrence(pt)) <= 1e-10);
      CHECK(std::abs(row.fidelity - werner_ad::fidelity(pt)) <= 1e-10);
      CHECK(std::abs(row.bell - testing::werner_ad_bell_from_correlations(0.8, row.q)) <= 1e-10);
    }
  }

  TEST_CASE("scan rejects bad grids") {
    const std::vector<double> empty;
    const std::vector<double> unsorted{0.0, 0.5, 0.4};
    const std::vector<double> repeated{0.1, 0.1};
    const std::vector<double> outside{0.5, 1.5};
    CHECK_THROWS_AS(scan(bell_singlet(), AD, empty), BadGrid);
    CHECK_THROWS_AS(scan(bell_singlet(), AD, unsorted), BadGrid);
    CHECK_THROWS_AS(scan(bell_singlet(), AD, repeated), BadGrid);
    CHECK_THROWS_AS(scan(bell_singlet(), AD, outside), BadGrid);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 1), BadGrid);
  }

  TEST_CASE("werner onset parameters with no noise") {
    CHECK(std::abs(*werner_onset_p(Measure::Concurrence) - 1.0 / 3.0) <= 1e-9);
    CHECK(std::abs(*werner_onset_p(Measure::Fidelity) - 1.0 / 3.0) <= 1e-9);
    CHECK(std::abs(*werner_onset_p(Measure::Bell) - 1.0 / std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(*werner_onset_p(Measure::Gisin) - (2 * gisin_bound() - 1)) <= 1e-9);
  }
}
