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
#include <string_view>
#include <vector>

#include "qnl/linalg.hpp"
#include "qnl/states.hpp"

namespace qnl {

enum class ChannelFamily { AmplitudeDamping, PhaseDamping, Depolarizing };

/// Which qubit the channel acts on. B is the qubit sent to the remote party.
enum class ChannelSide { A, B, Both };

/// `amplitude-damping`, `phase-damping`, `depolarizing`.
std::string_view to_string(ChannelFamily f);
std::optional<ChannelFamily> parse_channel_family(std::string_view name);

/// A single-qubit channel in Kraus form with strength q in [0, 1].
class KrausChannel {
 public:
  /// Throws QOutOfRange unless 0 <= q <= 1.
  KrausChannel(ChannelFamily family, double q);

  ChannelFamily family() const { return family_; }
  double strength() const { return q_; }
  const std::vector<Matrix2>& ops() const { return ops_; }

  /// Largest entry of |sum_i M_i^dagger M_i - I|.
  double completeness_defect() const;

  /// Applies the channel to a single-qubit density matrix.
  Matrix2 apply_single(const Matrix2& rho) const;

 private:
  ChannelFamily family_;
  double q_;
  std::vector<Matrix2> ops_;
};

/// M0 = diag(1, sqrt(1-q)), M1 = sqrt(q) |0><1|.
KrausChannel amplitude_damping(double q);

/// M0 = diag(1, sqrt(1-q)), M1 = diag(0, sqrt(q)).
KrausChannel phase_damping(double q);

/// rho -> (1-q) rho + q I/2, in the four-operator Pauli form.
KrausChannel depolarizing(double q);

inline KrausChannel make_channel(ChannelFamily family, double q) { return {family, q}; }

/// sum_i K_i rho K_i^dagger with K_i = I (x) M_i (side B), M_i (x) I (side A),
/// or both in sequence. The result is re-validated as a density matrix.
DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch,
                    ChannelSide side = ChannelSide::B);

}  // namespace qnl
