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

#include "qvc/encoding.hpp"

#include <cmath>
#include <string>

#include "qvc/errors.hpp"

namespace qvc {

int Preprocessor::padded_dim() const {
  if (input_dim < 1) {
    throw ConfigError("preprocessor: input_dim must be positive");
  }
  int d = 1;
  while (d < input_dim) d *= 2;
  return d;
}

int Preprocessor::n_qubits() const {
  const int padded = padded_dim();
  int bits = 0;
  while ((1 << bits) < padded) ++bits;
  // A single amplitude (padded_dim == 1) still needs one qubit to exist in.
  if (bits == 0) bits = 1;
  if (copies < 1) {
    throw ConfigError("preprocessor: copies must be >= 1");
  }
  return bits * copies;
}

namespace {

double normalization_chi(const std::vector<double> &x, const Preprocessor &p) {
  if (static_cast<int>(x.size()) != p.input_dim) {
    throw DimensionError("preprocess: input of dimension " +
                         std::to_string(x.size()) + ", preprocessor expects " +
                         std::to_string(p.input_dim));
  }
  const int n_pad = p.padded_dim() - p.input_dim;
  double sum_sq = 0.0;
  for (double v : x) sum_sq += v * v;
  sum_sq += static_cast<double>(n_pad) * p.pad_value * p.pad_value;
  if (sum_sq <= 0.0) {
    throw GateError(
        "preprocess: zero feature vector with zero padding has no "
        "normalization");
  }
  return 1.0 / std::sqrt(sum_sq);
}

}  // namespace

std::vector<double> preprocess(const std::vector<double> &x,
                               const Preprocessor &p) {
  const double chi = normalization_chi(x, p);
  const int n_pad = p.padded_dim() - p.input_dim;
  std::vector<double> out;
  out.reserve(p.padded_dim());
  for (double v : x) out.push_back(chi * v);
  for (int k = 0; k < n_pad; ++k) out.push_back(chi * p.pad_value);
  return out;
}

EncodedInput encode(const std::vector<double> &x, const Preprocessor &p) {
  EncodedInput enc;
  enc.chi = normalization_chi(x, p);
  const std::vector<double> normalized = preprocess(x, p);

  std::vector<cplx> amps;
  amps.reserve(normalized.size());
  for (double v : normalized) amps.emplace_back(v, 0.0);
  if (amps.size() == 1) {
    // Degenerate one-feature input: park it on a single qubit as |0>.
    amps.push_back({0.0, 0.0});
  }
  enc.state = from_amplitudes(std::move(amps));
  if (p.copies > 1) enc.state = tensorial(enc.state, p.copies);
  return enc;
}

StateVector tensorial(const StateVector &s, int d) {
  if (d < 1) {
    throw ConfigError("tensorial: copies must be >= 1");
  }
  if (d == 1) return s;
  if (d * s.n_qubits > max_qubits()) {
    throw CapacityError("tensorial: " + std::to_string(d * s.n_qubits) +
                        " qubits exceed the register cap of " +
                        std::to_string(max_qubits()));
  }
  // Iterated Kronecker product in the register's MSB-first order: the first
  // copy owns the most significant bits.
  std::vector<cplx> acc = s.amps;
  for (int k = 1; k < d; ++k) {
    std::vector<cplx> next(acc.size() * s.dim());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        next[i * s.dim() + j] = acc[i] * s.amps[j];
      }
    }
    acc = std::move(next);
  }
  StateVector out;
  out.n_qubits = d * s.n_qubits;
  out.amps = std::move(acc);
  return out;
}

}  // namespace qvc
