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

#include "qnl/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace qnl {

std::string format_number(double v) {
  char buf[32];
  // Adding 0.0 folds -0 into +0.
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

std::string format_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

double round_significant(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

}  // namespace qnl
