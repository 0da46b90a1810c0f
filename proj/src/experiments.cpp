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

#include "qvc/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "qvc/errors.hpp"

namespace qvc {

namespace {

double draw_unit(Rng &rng, bool gaussian) {
  if (!gaussian) return rng.uniform(-1.0, 1.0);
  // Box-Muller; one value per draw keeps the stream layout simple.
  const double u1 = std::max(rng.uniform(), 1e-300);
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace

std::vector<double> perturb_parameters(const std::vector<double> &theta,
                                       double level, Rng &rng, bool gaussian) {
  std::vector<double> out = theta;
  for (double &t : out) t *= 1.0 + level * draw_unit(rng, gaussian);
  return out;
}

std::vector<double> perturb_features(const std::vector<double> &x, double level,
                                     Rng &rng, bool gaussian) {
  std::vector<double> out = x;
  for (double &v : out) v *= 1.0 + level * draw_unit(rng, gaussian);
  return out;
}

void NoiseReport::finalize() {
  if (impacts.empty()) return;
  double sum = 0.0;
  max = impacts.front();
  min = impacts.front();
  for (double v : impacts) {
    sum += v;
    max = std::max(max, v);
    min = std::min(min, v);
  }
  mean = sum / static_cast<double>(impacts.size());
  double var = 0.0;
  for (double v : impacts) var += (v - mean) * (v - mean);
  stddev = impacts.size() > 1
               ? std::sqrt(var / static_cast<double>(impacts.size()))
               : 0.0;
}

namespace {

NoiseReport run_sweep(const Classifier &trained, const Dataset &test_set,
                      const NoiseSpec &spec, bool perturb_inputs) {
  if (spec.level < 0.0) {
    throw ConfigError("noise sweep: level must be non-negative");
  }
  NoiseReport report;
  report.level = spec.level;
  report.baseline_error = classifier_error(trained, test_set);
  report.absolute_fallback = report.baseline_error <= 0.0;

  for (int trial = 0; trial < spec.trials; ++trial) {
    Rng rng(derive_seed(spec.seed, {static_cast<std::uint64_t>(trial),
                                    perturb_inputs ? 1u : 0u}));
    double error;
    if (perturb_inputs) {
      Dataset noisy = test_set;
      for (auto &x : noisy.features) {
        x = perturb_features(x, spec.level, rng, spec.gaussian);
      }
      error = classifier_error(trained, noisy);
    } else {
      Classifier noisy = trained;
      noisy.theta =
          perturb_parameters(trained.theta, spec.level, rng, spec.gaussian);
      error = classifier_error(noisy, test_set);
    }
    const double impact = report.absolute_fallback
                              ? error - report.baseline_error
                              : (error - report.baseline_error) /
                                    report.baseline_error;
    report.impacts.push_back(impact);
  }
  report.finalize();
  return report;
}

}  // namespace

NoiseReport noise_sweep(const Classifier &trained, const Dataset &test_set,
                        const NoiseSpec &spec) {
  return run_sweep(trained, test_set, spec, false);
}

NoiseReport input_noise_sweep(const Classifier &trained,
                              const Dataset &test_set, const NoiseSpec &spec) {
  return run_sweep(trained, test_set, spec, true);
}

PropagationReport propagation_bound_check(const CircuitSpec &spec,
                                          const std::vector<double> &theta,
                                          double delta, int trials,
                                          std::uint64_t seed) {
  if (delta < 0.0 || delta > 1e-2) {
    throw ConfigError("propagation_bound_check: delta must be in [0, 1e-2]");
  }
  PropagationReport report;
  report.delta = delta;
  report.trials = trials;
  const int gate_slots = static_cast<int>(spec.slots.size());
  report.bound = 4.0 * gate_slots * delta;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, {0xb0, static_cast<std::uint64_t>(trial)}));
    // Random input state.
    std::vector<cplx> raw(std::size_t{1} << spec.n_qubits);
    for (cplx &a : raw) a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const StateVector input = from_amplitudes(std::move(raw));

    std::vector<double> shifted = theta;
    for (double &t : shifted) t += delta * rng.uniform(-1.0, 1.0);

    const StateVector base = apply_circuit(spec, theta, input);
    const StateVector moved = apply_circuit(spec, shifted, input);
    double dev_sq = 0.0;
    for (std::size_t k = 0; k < base.dim(); ++k) {
      dev_sq += std::norm(moved.amps[k] - base.amps[k]);
    }
    report.max_deviation = std::max(report.max_deviation, std::sqrt(dev_sq));
  }
  report.max_ratio = report.bound > 0.0 ? report.max_deviation / report.bound
                                        : 0.0;
  report.violated = report.bound > 0.0 && report.max_deviation > report.bound;
  return report;
}

}  // namespace qvc
