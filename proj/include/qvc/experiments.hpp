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

#include "qvc/data.hpp"

namespace qvc {

/// Sweep settings: relative perturbation magnitude, what is perturbed, and
/// how many independent trials to run.
struct NoiseSpec {
  double level = 0.01;
  enum class Target { Parameters, Inputs };
  Target target = Target::Parameters;
  int trials = 20;
  std::uint64_t seed = 0;
  /// Perturbation model: uniform in [-level, level] relative by default;
  /// Gaussian with sigma = level behind this flag.
  bool gaussian = false;
};

/// Relative-impact statistics of one sweep. When the baseline test error is
/// zero the relative ratio is undefined; the sweep then reports absolute
/// error changes and sets `absolute_fallback`.
struct NoiseReport {
  double level = 0.0;
  double baseline_error = 0.0;
  std::vector<double> impacts;  // per-trial RI (or absolute change)
  double mean = 0.0, stddev = 0.0, max = 0.0, min = 0.0;
  bool absolute_fallback = false;

  void finalize();
};

/// theta_i <- theta_i * (1 + level * u_i), u_i i.i.d. uniform in [-1, 1]
/// (or standard normal in the Gaussian variant).
std::vector<double> perturb_parameters(const std::vector<double> &theta,
                                       double level, Rng &rng,
                                       bool gaussian = false);

/// Same multiplicative model applied to a feature vector (before the
/// preprocessing renormalization).
std::vector<double> perturb_features(const std::vector<double> &x, double level,
                                     Rng &rng, bool gaussian = false);

/// Evaluates the impact of parameter noise on the test error over
/// spec.trials independent perturbations of a trained classifier.
NoiseReport noise_sweep(const Classifier &trained, const Dataset &test_set,
                        const NoiseSpec &spec);

/// Input-noise variant: features perturbed, parameters untouched.
NoiseReport input_noise_sweep(const Classifier &trained,
                              const Dataset &test_set, const NoiseSpec &spec);

/// Worst-case propagation check: perturbing every parameter by at most
/// delta (absolute) must move the output state by no more than 4 * L *
/// delta in 2-norm, L being the parametrized gate count.
struct PropagationReport {
  double delta = 0.0;
  double bound = 0.0;           // 4 * L * delta
  double max_deviation = 0.0;   // worst ||psi' - psi|| observed
  double max_ratio = 0.0;       // max_deviation / bound
  int trials = 0;
  bool violated = false;
};

PropagationReport propagation_bound_check(const CircuitSpec &spec,
                                          const std::vector<double> &theta,
                                          double delta, int trials,
                                          std::uint64_t seed);

}  // namespace qvc
