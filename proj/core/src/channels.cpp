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

#include "qnl/channels.hpp"

#include <string>

#include "qnl/error.hpp"

namespace qnl {

namespace {

std::vector<Matrix2> build_ops(ChannelFamily family, double q) {
  switch (family) {
    case ChannelFamily::AmplitudeDamping:
      return {Matrix2{1.0, 0.0, 0.0, std::sqrt(1.0 - q)}, Matrix2{0.0, std::sqrt(q), 0.0, 0.0}};
    case ChannelFamily::PhaseDamping:
      return {Matrix2{1.0, 0.0, 0.0, std::sqrt(1.0 - q)}, Matrix2{0.0, 0.0, 0.0, std::sqrt(q)}};
    case ChannelFamily::Depolarizing: {
      const double w = std::sqrt(q / 4.0);
      return {Matrix2::identity() * std::sqrt(1.0 - 0.75 * q), pauli::x() * w, pauli::y() * w,
              pauli::z() * w};
    }
  }
  throw Error("unknown channel family");
}

Matrix4 kraus_sum(const Matrix4& rho, const std::vector<Matrix2>& ops, bool on_a) {
  Matrix4 out;
  for (const Matrix2& m : ops) {
    const Matrix4 k = on_a ? kron(m, Matrix2::identity()) : kron(Matrix2::identity(), m);
    out += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace

std::string_view to_string(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::AmplitudeDamping: return "amplitude-damping";
    case ChannelFamily::PhaseDamping: return "phase-damping";
    case ChannelFamily::Depolarizing: return "depolarizing";
  }
  return "unknown";
}

std::optional<ChannelFamily> parse_channel_family(std::string_view name) {
  if (name == "amplitude-damping") return ChannelFamily::AmplitudeDamping;
  if (name == "phase-damping") return ChannelFamily::PhaseDamping;
  if (name == "depolarizing") return ChannelFamily::Depolarizing;
  return std::nullopt;
}

KrausChannel::KrausChannel(ChannelFamily family, double q) : family_(family), q_(q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw QOutOfRange("channel strength q must lie in [0, 1], got " + std::to_string(q));
  ops_ = build_ops(family, q);
}

double KrausChannel::completeness_defect() const {
  Matrix2 sum;
  for (const Matrix2& m : ops_) sum += m.adjoint() * m;
  return max_abs_diff(sum, Matrix2::identity());
}

Matrix2 KrausChannel::apply_single(const Matrix2& rho) const {
  Matrix2 out;
  for (const Matrix2& m : ops_) out += m * rho * m.adjoint();
  return out;
}

KrausChannel amplitude_damping(double q) { return {ChannelFamily::AmplitudeDamping, q}; }
KrausChannel phase_damping(double q) { return {ChannelFamily::PhaseDamping, q}; }
KrausChannel depolarizing(double q) { return {ChannelFamily::Depolarizing, q}; }

DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch, ChannelSide side) {
  Matrix4 out = rho.matrix();
  // The A- and B-side sums commute, so the order for Both is immaterial.
  if (side == ChannelSide::A || side == ChannelSide::Both) out = kraus_sum(out, ch.ops(), true);
  if (side == ChannelSide::B || side == ChannelSide::Both) out = kraus_sum(out, ch.ops(), false);
  return DensityMatrix::validate(out);
}

}  // namespace qnl
