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

// Seeded Monte-Carlo generation of maximally entangled mixed states above the
// Gisin bound, and the per-state threshold-hierarchy experiment.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "qnl/channels.hpp"
#include "qnl/states.hpp"
#include "qnl/thresholds.hpp"

namespace qnl {

/// The project-wide generator. Streams are deterministic per seed within one
/// build; no cross-platform bit equality is promised.
using Rng = std::mt19937_64;

struct SamplerConfig {
  std::size_t n_states = 1;
  std::uint64_t seed = 0;
  ChannelFamily channel = ChannelFamily::AmplitudeDamping;
  double tol = 1e-6;
  /// Worker threads for threshold evaluation; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Uniform point of the 3-simplex (spacings of three sorted uniforms),
/// returned sorted descending.
MemsWeights sample_weights(Rng& rng);

struct MemsSample {
  MemsWeights weights;
  DensityMatrix state;
};

/// Rejection sampler: draws simplex weights and keeps the MEMS whose
/// teleportation fidelity exceeds the Gisin bound.
class MemsSampler {
 public:
  static constexpr std::uint64_t kMaxDraws = 1'000'000'000;

  explicit MemsSampler(std::uint64_t seed) : rng_(seed) {}

  /// Next accepted state. Throws RejectionStall past kMaxDraws total draws.
  MemsSample next();

  std::uint64_t draws() const { return draws_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  Rng rng_;
  std::uint64_t draws_ = 0;
  std::uint64_t accepted_ = 0;
};

/// Exactly cfg.n_states accepted states in draw order.
std::vector<MemsSample> sample_mems_above_gisin(const SamplerConfig& cfg);

struct HierarchyRecord {
  MemsWeights weights;
  ThresholdSet thresholds;
  /// q_B - q_G, q_F - q_B, q_C - q_F; absent when either side is absent.
  std::array<std::optional<double>, 3> gaps;
};

std::array<std::optional<double>, 3> hierarchy_gaps(const ThresholdSet& ts);

/// Present gaps all >= -slack.
bool gaps_nonnegative(const HierarchyRecord& r, double slack = 1e-6);

/// Samples cfg.n_states states and computes their threshold sets. Records are
/// in draw order regardless of how many workers evaluate them.
std::vector<HierarchyRecord> hierarchy_experiment(const SamplerConfig& cfg);

/// Header `p1,p2,p3,p4,q_G,q_B,q_F,q_C,gap_GB,gap_BF,gap_FC`, one row per
/// record, absent values as empty cells, 12 significant digits, LF endings.
void write_hierarchy_csv(std::ostream& out, const std::vector<HierarchyRecord>& records);

}  // namespace qnl
