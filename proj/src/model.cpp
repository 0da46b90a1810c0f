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

#include "qvc/model.hpp"

#include <cmath>
#include <string>

#include "qvc/errors.hpp"

namespace qvc {

double estimate_prob_by_sampling(const StateVector &s, int q, int shots,
                                 std::uint64_t seed) {
  if (shots < 1) {
    throw ConfigError("shot estimator needs at least one sample");
  }
  Rng rng(seed);
  const double p = prob_qubit_one(s, q);
  int ones = 0;
  for (int i = 0; i < shots; ++i) {
    if (rng.bernoulli(p)) ++ones;
  }
  return static_cast<double>(ones) / static_cast<double>(shots);
}

namespace {

int threshold_label(double pi) { return pi > 0.5 ? 1 : 0; }

}  // namespace

Prediction continuous_output(const Classifier &c, const std::vector<double> &x,
                             const EstimatorMode &mode,
                             const std::vector<bool> *mask) {
  const EncodedInput enc = encode(x, c.preprocessor);
  const StateVector out = apply_circuit(c.spec, c.theta, enc.state, mask);
  Prediction pred;
  pred.p = mode.is_exact()
               ? prob_qubit_one(out, 0)
               : estimate_prob_by_sampling(out, 0, mode.shots, mode.seed);
  pred.pi = pred.p + c.bias;
  pred.label = threshold_label(pred.pi);
  return pred;
}

double sigma_z_output(const Classifier &c, const std::vector<double> &x) {
  const EncodedInput enc = encode(x, c.preprocessor);
  const StateVector out = apply_circuit(c.spec, c.theta, enc.state);
  // E[sigma_z] on qubit 0 = p(0) - p(1); the printed form of the readout
  // identity maps the eigenvalue +1 to probability 1 for state |0>, so the
  // consistent probability of reading 1 is (1 - E) / 2.
  const double expectation = 1.0 - 2.0 * prob_qubit_one(out, 0);
  return (1.0 - expectation) / 2.0 + c.bias;
}

double hadamard_test_states(const StateVector &a, const StateVector &b,
                            const EstimatorMode &mode) {
  if (a.n_qubits != b.n_qubits) {
    throw DimensionError("hadamard_test: register sizes differ");
  }
  // Joint register with the ancilla as qubit 0:
  // (|0>|A> + |1>|B>)/sqrt(2) -> H on ancilla ->
  // (|0>(|A>+|B>) + |1>(|A>-|B>))/2.
  StateVector joint;
  joint.n_qubits = a.n_qubits + 1;
  joint.amps.resize(a.dim() * 2);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    joint.amps[i] = 0.5 * (a.amps[i] + b.amps[i]);
    joint.amps[i + a.dim()] = 0.5 * (a.amps[i] - b.amps[i]);
  }
  const double p0 = mode.is_exact()
                        ? 1.0 - prob_qubit_one(joint, 0)
                        : 1.0 - estimate_prob_by_sampling(joint, 0, mode.shots,
                                                          mode.seed);
  return 2.0 * p0 - 1.0;
}

double hadamard_test(const CircuitSpec &spec_a, const std::vector<double> &theta_a,
                     const CircuitSpec &spec_b, const std::vector<double> &theta_b,
                     const StateVector &input, const EstimatorMode &mode) {
  if (spec_a.n_qubits != spec_b.n_qubits) {
    throw DimensionError("hadamard_test: circuits act on different registers");
  }
  const StateVector a = apply_circuit(spec_a, theta_a, input);
  const StateVector b = apply_circuit(spec_b, theta_b, input);
  return hadamard_test_states(a, b, mode);
}

int predict_multiclass(const std::vector<Classifier> &ensemble,
                       const std::vector<double> &x,
                       const EstimatorMode &mode) {
  if (ensemble.empty()) {
    throw ConfigError("predict_multiclass: empty ensemble");
  }
  if (ensemble.size() == 1) {
    const Prediction pred = continuous_output(ensemble[0], x, mode);
    return pred.label == 1 ? 0 : 1;
  }
  int best = 0;
  double best_pi = continuous_output(ensemble[0], x, mode).pi;
  for (std::size_t i = 1; i < ensemble.size(); ++i) {
    EstimatorMode m = mode;
    if (!mode.is_exact()) {
      m.seed = derive_seed(mode.seed, {static_cast<std::uint64_t>(i)});
    }
    const double pi = continuous_output(ensemble[i], x, m).pi;
    if (pi > best_pi) {
      best = static_cast<int>(i);
      best_pi = pi;
    }
  }
  return best;
}

}  // namespace qvc
