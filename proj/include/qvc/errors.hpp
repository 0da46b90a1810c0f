// Copyright 2026 The qvc authors
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

namespace qvc {

/// Base class for all qvc errors.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Register size out of range (n = 0 or above the configured qubit cap).
struct CapacityError : Error {
  using Error::Error;
};

/// Mismatched dimensions / invalid indices between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// A gate argument fails its mathematical precondition (non-unitary,
/// control == target, zero vector, non-power-of-two length, ...).
struct GateError : Error {
  using Error::Error;
};

/// A controlled gate is a pure global phase and cannot be compiled.
struct DegenerateGateError : Error {
  using Error::Error;
};

/// Requested derivative of a slot kind the training path does not support.
struct UnsupportedDerivativeError : Error {
  using Error::Error;
};

/// Input file could not be parsed; message carries the line number.
struct ParseError : Error {
  using Error::Error;
};

/// Invalid run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qvc
