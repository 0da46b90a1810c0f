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

#include "qvc/model.hpp"

namespace qvc {

/// How d(pi)/d(theta_mu) is evaluated:
///  - ExactLCU: the training default. Expands the gate derivative into
///    unitary terms and combines exact inner products against the forward
///    state, using the upper-half projector for the sign-safe probability
///    derivative.
///  - HadamardShots: same expansion, but every real inner product is
///    estimated by the sampled interference test (sigma_z folded into the
///    second circuit, which keeps both branches unitary).
///  - DirectOracle: applies the entrywise derivative matrix of the gate
///    (non-unitary) along the circuit. Verification-only path.
struct GradientMode {
  enum class Kind { DirectOracle, ExactLCU, HadamardShots };
  Kind kind = Kind::ExactLCU;
  int shots = 0;
  std::uint64_t seed = 0;

  static GradientMode exact_lcu() { return {}; }
  static GradientMode direct_oracle() { return {Kind::DirectOracle, 0, 0}; }
  static GradientMode hadamard_shots(int s, std::uint64_t seed) {
    return {Kind::HadamardShots, s, seed};
  }
};

/// d(pi)/d(theta_mu) for one input. Masked slots contribute zero.
double grad_pi(const Classifier &c, const std::vector<double> &x, int mu,
               const GradientMode &mode,
               const std::vector<bool> *mask = nullptr);

/// d(pi)/d(bias) is identically 1.
double grad_bias(const Classifier &c, const std::vector<double> &x);

/// Per-sample least-squares gradient: (pi - y) * d(pi)/d(nu) for every
/// circuit parameter and the bias. pi is resolved with `estimator`.
struct SampleGradient {
  std::vector<double> theta;
  double bias = 0.0;
};
SampleGradient grad_cost_sample(const Classifier &c,
                                const std::vector<double> &x, double y,
                                const GradientMode &gradient,
                                const EstimatorMode &estimator =
                                    EstimatorMode::exact(),
                                const std::vector<bool> *mask = nullptr);

/// Central finite difference (pi(mu+h) - pi(mu-h)) / 2h in Exact mode.
double finite_difference_pi(const Classifier &c, const std::vector<double> &x,
                            int mu, double h,
                            const std::vector<bool> *mask = nullptr);

/// Number of circuit evaluations the LCU expansion runs for one parameter:
/// 1 (alpha) or 2 (beta/gamma) for single-qubit slots, doubled for
/// controlled slots.
int lcu_term_count(SlotKind kind, GateAngle wrt);

}  // namespace qvc
