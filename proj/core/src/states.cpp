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

#include "qnl/states.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qnl/error.hpp"

namespace qnl {

namespace {

std::string fmt_value(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Projector onto (|01> + sign |10>)/sqrt(2).
Matrix4 psi_projector(double sign) {
  Matrix4 m;
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = 0.5 * sign;
  m(2, 1) = 0.5 * sign;
  return m;
}

}  // namespace

DensityMatrix DensityMatrix::validate(const Matrix4& m) {
  if (!m.is_finite()) throw NotHermitian("density matrix has non-finite entries");

  const double defect = hermiticity_defect(m);
  if (defect > kStateTol)
    throw NotHermitian("density matrix is not Hermitian: max |rho - rho^dagger| = " +
                       fmt_value(defect));

  const complex tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTol)
    throw TraceNotOne("density matrix trace is " + fmt_value(tr.real()) + " (expected 1)");

  const double smallest = hermitian_eig(m, kStateTol).values[3];
  if (smallest < -kStateTol)
    throw NotPSD("density matrix is not positive semidefinite: min eigenvalue = " +
                 fmt_value(smallest));

  return DensityMatrix(m);
}

std::array<double, 4> DensityMatrix::eigenvalues() const {
  return hermitian_eig(mat_, kStateTol).values;
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

WernerParams::WernerParams(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterOutOfRange("Werner parameter p must lie in [0, 1], got " + std::to_string(p));
}

MemsWeights::MemsWeights(double w1, double w2, double w3, double w4) : p_{w1, w2, w3, w4} {
  std::sort(p_.begin(), p_.end(), std::greater<>());
  for (double w : p_)
    if (!(w >= 0.0))
      throw ParameterOutOfRange("MEMS weights must be non-negative, got " + std::to_string(w));
  const double sum = p_[0] + p_[1] + p_[2] + p_[3];
  if (std::abs(sum - 1.0) > 1e-12)
    throw ParameterOutOfRange("MEMS weights must sum to 1, got " + std::to_string(sum));
}

DensityMatrix bell_singlet() { return DensityMatrix::validate(psi_projector(-1.0)); }

DensityMatrix werner(WernerParams params) {
  const double p = params.p();
  return DensityMatrix::validate(Matrix4::identity() * ((1.0 - p) / 4.0) +
                                 psi_projector(-1.0) * p);
}

DensityMatrix mems(const MemsWeights& w) {
  Matrix4 m = psi_projector(-1.0) * w[0] + psi_projector(1.0) * w[2];
  m(0, 0) = w[1];
  m(3, 3) = w[3];
  return DensityMatrix::validate(m);
}

DensityMatrix density_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("density matrix JSON: ") + e.what());
  }
  auto read_block = [&j](const char* key) {
    if (!j.is_object() || !j.contains(key))
      throw Error(std::string("density matrix JSON: missing key \"") + key + "\"");
    const auto& rows = j.at(key);
    if (!rows.is_array() || rows.size() != 4)
      throw Error(std::string("density matrix JSON: \"") + key + "\" must be a 4x4 array");
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t r = 0; r < 4; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || row.size() != 4)
        throw Error(std::string("density matrix JSON: \"") + key + "\" must be a 4x4 array");
      for (std::size_t c = 0; c < 4; ++c) {
        if (!row[c].is_number())
          throw Error(std::string("density matrix JSON: non-numeric entry in \"") + key + "\"");
        out[r][c] = row[c].get<double>();
      }
    }
    return out;
  };
  const auto re = read_block("re");
  const auto im = read_block("im");
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = complex{re[r][c], im[r][c]};
  return DensityMatrix::validate(m);
}

DensityMatrix load_density_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open density matrix file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return density_from_json(buf.str());
}

std::string density_to_json(const DensityMatrix& rho) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ir = nlohmann::json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(rho(r, c).real());
      ir.push_back(rho(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return nlohmann::json{{"re", re}, {"im", im}}.dump();
}

}  // namespace qnl
