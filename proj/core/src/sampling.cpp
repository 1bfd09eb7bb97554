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

#include "qnl/sampling.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <thread>

#include "qnl/error.hpp"
#include "qnl/format.hpp"
#include "qnl/measures.hpp"

namespace qnl {

MemsWeights sample_weights(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::array<double, 3> u{unit(rng), unit(rng), unit(rng)};
  std::sort(u.begin(), u.end());
  return MemsWeights(u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]);
}

MemsSample MemsSampler::next() {
  const double bound = gisin_bound();
  while (draws_ < kMaxDraws) {
    ++draws_;
    const MemsWeights w = sample_weights(rng_);
    DensityMatrix state = mems(w);
    if (fidelity(state) > bound) {
      ++accepted_;
      return {w, state};
    }
  }
  throw RejectionStall("no state above the Gisin bound within " + std::to_string(kMaxDraws) +
                       " draws");
}

std::vector<MemsSample> sample_mems_above_gisin(const SamplerConfig& cfg) {
  if (cfg.n_states < 1) throw ParameterOutOfRange("n_states must be at least 1");
  MemsSampler sampler(cfg.seed);
  std::vector<MemsSample> out;
  out.reserve(cfg.n_states);
  for (std::size_t i = 0; i < cfg.n_states; ++i) out.push_back(sampler.next());
  return out;
}

std::array<std::optional<double>, 3> hierarchy_gaps(const ThresholdSet& ts) {
  auto diff = [](const std::optional<double>& hi,
                 const std::optional<double>& lo) -> std::optional<double> {
    if (!hi || !lo) return std::nullopt;
    return *hi - *lo;
  };
  return {diff(ts.q_b, ts.q_g), diff(ts.q_f, ts.q_b), diff(ts.q_c, ts.q_f)};
}

bool gaps_nonnegative(const HierarchyRecord& r, double slack) {
  return std::all_of(r.gaps.begin(), r.gaps.end(),
                     [slack](const std::optional<double>& g) { return !g || *g >= -slack; });
}

std::vector<HierarchyRecord> hierarchy_experiment(const SamplerConfig& cfg) {
  // Draws stay single-threaded so the sequence depends only on the seed.
  const std::vector<MemsSample> samples = sample_mems_above_gisin(cfg);

  std::vector<std::optional<ThresholdSet>> results(samples.size());
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(samples.size()));

  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < samples.size(); i += workers)
        results[i] = threshold_set(samples[i].state, cfg.channel, cfg.tol);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<HierarchyRecord> records;
  records.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    records.push_back({samples[i].weights, *results[i], hierarchy_gaps(*results[i])});
  return records;
}

void write_hierarchy_csv(std::ostream& out, const std::vector<HierarchyRecord>& records) {
  out << "p1,p2,p3,p4,q_G,q_B,q_F,q_C,gap_GB,gap_BF,gap_FC\n";
  for (const auto& r : records) {
    for (double w : r.weights.values()) out << format_number(w) << ',';
    const auto& t = r.thresholds;
    out << format_number(t.q_g) << ',' << format_number(t.q_b) << ',' << format_number(t.q_f)
        << ',' << format_number(t.q_c) << ',' << format_number(r.gaps[0]) << ','
        << format_number(r.gaps[1]) << ',' << format_number(r.gaps[2]) << '\n';
  }
}

}  // namespace qnl
