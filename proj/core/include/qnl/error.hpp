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

#include <stdexcept>
#include <string>

namespace qnl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class TraceNotOne : public Error {
 public:
  using Error::Error;
};

/// A state or model parameter outside its admissible range.
class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Channel strength q outside [0, 1].
class QOutOfRange : public ParameterOutOfRange {
 public:
  using ParameterOutOfRange::ParameterOutOfRange;
};

class InvalidTolerance : public Error {
 public:
  using Error::Error;
};

class BadGrid : public Error {
 public:
  using Error::Error;
};

/// Rejection sampler exceeded its draw budget.
class RejectionStall : public Error {
 public:
  using Error::Error;
};

}  // namespace qnl
