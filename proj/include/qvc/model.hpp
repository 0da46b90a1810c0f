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

#include <cstdint>
#include <vector>

#include "qvc/circuit.hpp"
#include "qvc/encoding.hpp"

namespace qvc {

/// How single-qubit probabilities (and interference probabilities) are
/// resolved: exactly from amplitudes, or by averaging S seeded measurement
/// samples.
struct EstimatorMode {
  enum class Kind { Exact, Shots };
  Kind kind = Kind::Exact;
  int shots = 0;
  std::uint64_t seed = 0;

  static EstimatorMode exact() { return {}; }
  static EstimatorMode with_shots(int s, std::uint64_t seed) {
    return {Kind::Shots, s, seed};
  }
  bool is_exact() const { return kind == Kind::Exact; }
};

/// The trained model: circuit, parameters, bias and the preprocessing that
/// feeds it.
struct Classifier {
  CircuitSpec spec;
  std::vector<double> theta;
  double bias = 0.0;
  Preprocessor preprocessor;
};

/// Classifier output for one input: measurement probability p, continuous
/// value pi = p + bias, and the thresholded binary label (1 iff pi > 0.5,
/// ties resolve to 0).
struct Prediction {
  double p = 0.0;
  double pi = 0.0;
  int label = 0;
};

/// Runs encode -> circuit -> readout of qubit 0 -> bias -> threshold.
/// Optionally with a dropout mask over circuit slots.
Prediction continuous_output(const Classifier &c, const std::vector<double> &x,
                             const EstimatorMode &mode,
                             const std::vector<bool> *mask = nullptr);

/// Same continuous value computed through the sigma_z expectation on qubit 0
/// with p(q0=1) = (1 - E[sigma_z]) / 2. Always exact; agrees with
/// continuous_output in Exact mode to double precision.
double sigma_z_output(const Classifier &c, const std::vector<double> &x);

/// Estimates Re<A|B> for the states prepared by two circuits on a common
/// input, via the simulated ancilla interference procedure:
/// (|0>|A> + |1>|B>)/sqrt(2), Hadamard on the ancilla, then
/// Re<A|B> = 2 p(ancilla = 0) - 1. Exact mode reads p from amplitudes,
/// Shots mode samples the ancilla.
double hadamard_test(const CircuitSpec &spec_a, const std::vector<double> &theta_a,
                     const CircuitSpec &spec_b, const std::vector<double> &theta_b,
                     const StateVector &input, const EstimatorMode &mode);

/// State-level variant used by the gradient path, where circuit B carries a
/// folded-in sigma_z factor.
double hadamard_test_states(const StateVector &a, const StateVector &b,
                            const EstimatorMode &mode);

/// One-vs-all ensemble prediction: argmax of the per-class continuous
/// outputs, ties toward the lowest class index. A single-entry ensemble
/// reduces to its binary decision (label 1 -> class 0, else class 1).
int predict_multiclass(const std::vector<Classifier> &ensemble,
                       const std::vector<double> &x,
                       const EstimatorMode &mode = EstimatorMode::exact());

/// Mean of `shots` Bernoulli samples of qubit q (the measurement estimator).
double estimate_prob_by_sampling(const StateVector &s, int q, int shots,
                                 std::uint64_t seed);

}  // namespace qvc
