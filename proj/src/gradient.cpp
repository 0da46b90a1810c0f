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

#include "qvc/gradient.hpp"

#include <string>

#include "qvc/errors.hpp"
#include "qvc/kernels.hpp"

namespace qvc {

namespace {

// <a | Pi_1 | b> restricted to the qubit-0 = 1 subspace, which is the
// contiguous upper half of the amplitude vector.
double upper_half_re(const StateVector &a, const StateVector &b) {
  const std::size_t half = a.dim() / 2;
  return kernels::active_table()
      .inner_product(a.amps.data() + half, b.amps.data() + half, half)
      .real();
}

bool slot_is_masked(const std::vector<bool> *mask, int i) {
  return mask != nullptr && (*mask)[i];
}

// Forward state with the derivative matrix of one slot inserted in place of
// the gate (entrywise differentiation; the result is not a quantum state).
StateVector direct_derivative_state(const CircuitSpec &spec,
                                    const std::vector<double> &theta,
                                    int slot_idx, GateAngle wrt,
                                    const StateVector &input,
                                    const std::vector<bool> *mask) {
  const GateSlot &slot = spec.slots[slot_idx];
  StateVector st = input;
  for (int i = 0; i < slot_idx; ++i) {
    if (slot_is_masked(mask, i)) continue;
    detail::apply_slot_inplace(st, spec.slots[i], theta);
  }
  const GateParams p{theta[slot.param_offset], theta[slot.param_offset + 1],
                     theta[slot.param_offset + 2]};
  const Mat2 dg = gate_matrix_derivative(p, wrt);
  if (slot.kind == SlotKind::Single) {
    detail::apply_single_inplace(st, dg, slot.target);
  } else {
    // d/dmu C(G) = diag(0, dG): zero the control-0 subspace, then apply dG
    // on the target (the pairs mixed by the target bit share the control bit).
    detail::project_control_one(st, *slot.control);
    detail::apply_single_inplace(st, dg, slot.target);
  }
  for (std::size_t i = slot_idx + 1; i < spec.slots.size(); ++i) {
    if (slot_is_masked(mask, static_cast<int>(i))) continue;
    detail::apply_slot_inplace(st, spec.slots[i], theta);
  }
  return st;
}

}  // namespace

int lcu_term_count(SlotKind kind, GateAngle wrt) {
  const int base = wrt == GateAngle::Alpha ? 1 : 2;
  return kind == SlotKind::Controlled ? 2 * base : base;
}

double grad_pi(const Classifier &c, const std::vector<double> &x, int mu,
               const GradientMode &mode, const std::vector<bool> *mask) {
  if (mu < 0 || mu >= c.spec.param_len) {
    throw DimensionError("grad_pi: parameter index " + std::to_string(mu) +
                         " not present in the circuit");
  }
  const EncodedInput enc = encode(x, c.preprocessor);
  const StateVector psi = apply_circuit(c.spec, c.theta, enc.state, mask);

  // sigma_z folded into the forward state for the sampled interference path.
  StateVector psi_z;
  if (mode.kind == GradientMode::Kind::HadamardShots) {
    psi_z = psi;
    for (std::size_t k = psi_z.dim() / 2; k < psi_z.dim(); ++k) {
      psi_z.amps[k] = -psi_z.amps[k];
    }
  }

  double total = 0.0;
  int occurrence = 0;
  for (std::size_t i = 0; i < c.spec.slots.size(); ++i) {
    const GateSlot &slot = c.spec.slots[i];
    const int width = slot_param_width(slot.kind);
    if (mu < slot.param_offset || mu >= slot.param_offset + width) continue;
    const auto wrt = static_cast<GateAngle>(mu - slot.param_offset);

    switch (mode.kind) {
      case GradientMode::Kind::ExactLCU: {
        const auto terms = apply_circuit_derivative_slot(
            c.spec, c.theta, static_cast<int>(i), wrt, enc.state, mask);
        double acc = 0.0;
        for (const auto &[coef, st] : terms) acc += coef * upper_half_re(st, psi);
        total += 2.0 * acc;
        break;
      }
      case GradientMode::Kind::HadamardShots: {
        const auto terms = apply_circuit_derivative_slot(
            c.spec, c.theta, static_cast<int>(i), wrt, enc.state, mask);
        double acc = 0.0;
        int term_idx = 0;
        for (const auto &[coef, st] : terms) {
          const std::uint64_t seed = derive_seed(
              mode.seed, {static_cast<std::uint64_t>(mu),
                          static_cast<std::uint64_t>(occurrence),
                          static_cast<std::uint64_t>(term_idx++)});
          acc += coef * hadamard_test_states(
                            st, psi_z, EstimatorMode::with_shots(mode.shots, seed));
        }
        // d p / d mu = -1/2 d E[sigma_z] / d mu.
        total += -acc;
        break;
      }
      case GradientMode::Kind::DirectOracle: {
        if (slot_is_masked(mask, static_cast<int>(i))) break;
        if (slot.kind == SlotKind::ControlledPhase ||
            slot.kind == SlotKind::XRotation) {
          throw UnsupportedDerivativeError(
              "grad_pi: compiled-form slots are not differentiable");
        }
        const StateVector dpsi = direct_derivative_state(
            c.spec, c.theta, static_cast<int>(i), wrt, enc.state, mask);
        total += 2.0 * upper_half_re(dpsi, psi);
        break;
      }
    }
    ++occurrence;
  }
  return total;
}

double grad_bias(const Classifier &, const std::vector<double> &) { return 1.0; }

SampleGradient grad_cost_sample(const Classifier &c,
                                const std::vector<double> &x, double y,
                                const GradientMode &gradient,
                                const EstimatorMode &estimator,
                                const std::vector<bool> *mask) {
  const Prediction pred = continuous_output(c, x, estimator, mask);
  const double factor = pred.pi - y;
  SampleGradient g;
  g.theta.assign(c.spec.param_len, 0.0);
  for (std::size_t i = 0; i < c.spec.slots.size(); ++i) {
    const GateSlot &slot = c.spec.slots[i];
    if (slot_is_masked(mask, static_cast<int>(i))) continue;
    // Tied parameters are accumulated once per parameter index below, so
    // visit each index only at its first owning slot.
    for (int w = 0; w < slot_param_width(slot.kind); ++w) {
      const int mu = slot.param_offset + w;
      if (c.spec.slot_of_param(mu) != static_cast<int>(i)) continue;
      g.theta[mu] = factor * grad_pi(c, x, mu, gradient, mask);
    }
  }
  g.bias = factor * grad_bias(c, x);
  return g;
}

double finite_difference_pi(const Classifier &c, const std::vector<double> &x,
                            int mu, double h, const std::vector<bool> *mask) {
  if (h <= 0.0) {
    throw ConfigError("finite_difference_pi: step must be positive");
  }
  if (mu < 0 || mu >= c.spec.param_len) {
    throw DimensionError("finite_difference_pi: parameter index out of range");
  }
  Classifier shifted = c;
  shifted.theta[mu] = c.theta[mu] + h;
  const double up = continuous_output(shifted, x, EstimatorMode::exact(), mask).pi;
  shifted.theta[mu] = c.theta[mu] - h;
  const double down =
      continuous_output(shifted, x, EstimatorMode::exact(), mask).pi;
  return (up - down) / (2.0 * h);
}

}  // namespace qvc
