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

#include "qnl/measures.hpp"
#include "support.hpp"

using namespace qnl;

namespace {

DensityMatrix ket00() { return DensityMatrix::validate(Matrix4::diagonal({1, 0, 0, 0})); }
DensityMatrix maximally_mixed() { return werner(WernerParams(0.0)); }

// 2 |ad - bc| for the pure state a|00> + b|01> + c|10> + d|11>.
double pure_concurrence(const std::array<complex, 4>& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("spin_flip examples") {
    CHECK(max_abs_diff(spin_flip(maximally_mixed()), Matrix4::identity() * 0.25) <= 1e-15);
    CHECK(max_abs_diff(spin_flip(bell_singlet()), bell_singlet().matrix()) <= 1e-15);
    CHECK(max_abs_diff(spin_flip(ket00()), Matrix4::diagonal({0, 0, 0, 1})) <= 1e-15);
  }

  TEST_CASE("concurrence examples") {
    CHECK(concurrence(bell_singlet()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(concurrence(maximally_mixed()) == 0.0);
    CHECK(concurrence(werner(WernerParams(1.0 / 3.0))) <= 1e-14);
    for (double p : {0.4, 0.5, 0.75, 0.9, 1.0})
      CHECK(std::abs(concurrence(werner(WernerParams(p))) - (3 * p - 1) / 2) <= 1e-12);
    CHECK(std::abs(concurrence(werner(WernerParams(0.5))) - 0.25) <= 1e-12);
  }

  TEST_CASE("concurrence of pure states matches 2|ad - bc|") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
      std::array<complex, 4> psi{};
      double norm = 0.0;
      for (auto& z : psi) {
        z = testing::random_complex(rng);
        norm += std::norm(z);
      }
      for (auto& z : psi) z /= std::sqrt(norm);
      Matrix4 m;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
      const DensityMatrix rho = DensityMatrix::validate((m + m.adjoint()) * 0.5);
      CHECK(std::abs(concurrence(rho) - pure_concurrence(psi)) <= 1e-10);
    }
  }

  TEST_CASE("correlation_matrix examples") {
    const auto zero = correlation_matrix(maximally_mixed());
    const auto singlet = correlation_matrix(bell_singlet());
    const auto up = correlation_matrix(ket00());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(zero(i, j)) <= 1e-15);
        CHECK(std::abs(singlet(i, j) - (i == j ? -1.0 : 0.0)) <= 1e-15);
        CHECK(std::abs(up(i, j) - (i == 2 && j == 2 ? 1.0 : 0.0)) <= 1e-15);
      }
    }
  }

  TEST_CASE("n_value and fidelity examples") {
    CHECK(n_value(bell_singlet()) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(n_value(maximally_mixed()) <= 1e-15);
    CHECK(fidelity(bell_singlet()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(maximally_mixed()) == doctest::Approx(0.5).epsilon(1e-14));
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const DensityMatrix w = werner(WernerParams(p));
      CHECK(std::abs(n_value(w) - 3 * p) <= 1e-12);
      CHECK(std::abs(fidelity(w) - (1 + p) / 2) <= 1e-12);
    }
  }

  TEST_CASE("bell_parameter examples") {
    CHECK(std::abs(bell_parameter(bell_singlet()) - 2 * std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(bell_parameter(werner(WernerParams(1 / std::sqrt(2.0)))) - 2.0) <= 1e-12);
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      CHECK(std::abs(bell_parameter(werner(WernerParams(p))) - 2 * std::sqrt(2.0) * p) <= 1e-12);
    }
  }

  TEST_CASE("gisin_bound") {
    const double g = gisin_bound();
    CHECK(std::round(g * 100) / 100 == doctest::Approx(0.87));
    CHECK(g > 0.872);
    CHECK(g < 0.873);
    CHECK(g == testing::gisin_closed_form());
    // Werner onset of Gisin nonlocality; printed rounded as 0.74.
    CHECK(2 * g - 1 == doctest::Approx(0.7448).epsilon(1e-4));
  }

  TEST_CASE("classify examples") {
    CHECK(classify(maximally_mixed()).hierarchy_class == HierarchyClass::Separable);

    const MeasureReport r6 = classify(werner(WernerParams(0.6)));
    CHECK(r6.hierarchy_class == HierarchyClass::TeleportNotBell);
    CHECK(r6.concurrence == doctest::Approx(0.4));
    CHECK(r6.fidelity == doctest::Approx(0.8));
    CHECK(r6.bell == doctest::Approx(2 * std::sqrt(2.0) * 0.6));

    CHECK(classify(werner(WernerParams(0.9))).hierarchy_class == HierarchyClass::BeyondGisin);
    CHECK(classify(werner(WernerParams(0.72))).hierarchy_class == HierarchyClass::BellNotGisin);
  }

  TEST_CASE("classify boundaries fall into the lower class") {
    CHECK(classify_values(0.0, 1.0, 2.8) == HierarchyClass::Separable);
    CHECK(classify_values(0.1, 2.0 / 3.0, 0.0) == HierarchyClass::EntangledOnly);
    CHECK(classify_values(0.1, 0.8, 2.0) == HierarchyClass::TeleportNotBell);
    CHECK(classify_values(0.1, gisin_bound(), 2.5) == HierarchyClass::BellNotGisin);
    CHECK(classify_values(0.1, 0.9, 2.5) == HierarchyClass::BeyondGisin);
  }

  TEST_CASE("report fidelity equals (1 + N/3)/2 exactly") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
      const MeasureReport r = classify(testing::random_state(rng));
      CHECK(r.fidelity == 0.5 * (1.0 + r.n_value / 3.0));
    }
  }

  TEST_CASE("Werner class sequence along p") {
    const double p_tel = 1.0 / 3.0;
    const double p_bell = 1.0 / std::sqrt(2.0);
    const double p_gisin = 2 * gisin_bound() - 1;
    for (int i = 0; i <= 2000; ++i) {
      const double p = i / 2000.0;
      if (std::abs(p - p_tel) < 1e-6 || std::abs(p - p_bell) < 1e-6 ||
          std::abs(p - p_gisin) < 1e-6)
        continue;
      const auto cls = classify(werner(WernerParams(p))).hierarchy_class;
      CHECK(cls != HierarchyClass::EntangledOnly);
      HierarchyClass expected = HierarchyClass::Separable;
      if (p > p_tel) expected = HierarchyClass::TeleportNotBell;
      if (p > p_bell) expected = HierarchyClass::BellNotGisin;
      if (p > p_gisin) expected = HierarchyClass::BeyondGisin;
      CHECK(cls == expected);
    }
  }

  TEST_CASE("measure ranges and rho rho~ spectrum over random states") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 10000; ++i) {
      const DensityMatrix rho = testing::random_state(rng);
      const MeasureReport r = classify(rho);
      REQUIRE(r.concurrence >= 0.0);
      REQUIRE(r.concurrence <= 1.0);
      REQUIRE(r.fidelity >= 0.5 - 1e-12);
      REQUIRE(r.fidelity <= 1.0 + 1e-12);
      REQUIRE(r.bell >= 0.0);
      REQUIRE(r.bell <= 2 * std::sqrt(2.0) + 1e-12);
      if (r.bell > 2.0) REQUIRE(r.fidelity > 2.0 / 3.0);

      // Power sums of the non-Hermitian product rho rho~ determine its
      // spectrum; they must be real and match the computed roots.
      const Matrix4 prod = rho.matrix() * spin_flip(rho);
      const auto roots = spin_flip_roots(rho);
      Matrix4 power = prod;
      for (int k = 1; k <= 4; ++k) {
        const complex tr = power.trace();
        double expected = 0.0;
        for (double s : roots) expected += std::pow(s * s, k);
        REQUIRE(std::abs(tr.imag()) <= 1e-10);
        REQUIRE(std::abs(tr.real() - expected) <= 1e-10);
        power = power * prod;
      }
      const Matrix4 root = psd_sqrt(rho.matrix());
      const auto lambda = hermitian_eig(root * spin_flip(rho) * root, 1e-10).values;
      REQUIRE(lambda[3] >= -1e-10);
    }
  }

  TEST_CASE("Peres-Horodecki: entangled iff partial transpose is not PSD") {
    std::mt19937_64 rng(31415);
    int entangled = 0;
    for (int i = 0; i < 10000; ++i) {
      const DensityMatrix rho = testing::random_state(rng);
      const double min_pt =
          hermitian_eig(testing::partial_transpose_b(rho.matrix()), 1e-10).values[3];
      const bool by_concurrence = concurrence(rho) > 1e-9;
      const bool by_ppt = min_pt < -1e-9;
      REQUIRE(by_concurrence == by_ppt);
      entangled += by_concurrence;
    }
    // Both outcomes are represented in the sample.
    CHECK(entangled > 1000);
    CHECK(entangled < 10000);
  }
}
