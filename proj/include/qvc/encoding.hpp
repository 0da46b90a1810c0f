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

#include <vector>

#include "qvc/statevec.hpp"

namespace qvc {

/// Settings for turning a raw feature vector into an encoded state:
/// pad to the next power of two with `pad_value` constants, normalize to
/// unit length, then take `copies` Kronecker copies of the state.
struct Preprocessor {
  int input_dim = 0;
  double pad_value = 0.0;
  int copies = 1;

  /// Padded dimension: next power of two >= input_dim.
  int padded_dim() const;
  /// Qubits of the encoded register: copies * log2(padded_dim).
  int n_qubits() const;
};

/// An encoded input: the state plus the normalization factor chi applied to
/// the padded feature vector.
struct EncodedInput {
  StateVector state;
  double chi = 1.0;
};

/// Pads x with pad_value entries up to the next power of two and scales by
/// chi = 1/sqrt(sum x_j^2 + sum c_k^2). Throws on a zero vector with zero
/// padding (chi undefined).
std::vector<double> preprocess(const std::vector<double> &x,
                               const Preprocessor &p);

/// Amplitude-encodes x on log2(padded_dim) qubits and applies the tensorial
/// map for copies > 1.
EncodedInput encode(const std::vector<double> &x, const Preprocessor &p);

/// d-fold Kronecker power of the state's amplitude vector (d >= 1), using
/// the same most-significant-first bit order as the register itself.
StateVector tensorial(const StateVector &s, int d);

}  // namespace qvc
