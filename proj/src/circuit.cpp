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

#include "qvc/circuit.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qvc/errors.hpp"

namespace qvc {

int slot_param_width(SlotKind kind) {
  return (kind == SlotKind::Single || kind == SlotKind::Controlled) ? 3 : 1;
}

int CircuitSpec::slot_of_param(int mu) const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int w = slot_param_width(slots[i].kind);
    if (mu >= slots[i].param_offset && mu < slots[i].param_offset + w) {
      return static_cast<int>(i);
    }
  }
  throw DimensionError("parameter index " + std::to_string(mu) +
                       " not owned by any slot");
}

namespace {

int block_layer_size(int n, int r) { return n / std::gcd(n, r); }

void check_range(int n, int r) {
  if (r < 1 || r >= n) {
    throw ConfigError("block range r=" + std::to_string(r) +
                      " outside [1, " + std::to_string(n) + ")");
  }
}

}  // namespace

std::vector<GateSlot> build_block(int n, int r) {
  check_range(n, r);
  std::vector<GateSlot> slots;
  slots.reserve(n + block_layer_size(n, r));
  for (int q = 0; q < n; ++q) {
    slots.push_back({SlotKind::Single, q, std::nullopt, 0});
  }
  // Controlled layer in execution order: the product over j runs the j =
  // n/gcd(n,r) gate first, whose control is qubit 0, and closes the cycle
  // with the j = 1 gate targeting qubit 0.
  const int m = block_layer_size(n, r);
  for (int j = m; j >= 1; --j) {
    const int control = (j * r) % n;
    const int target = ((j - 1) * r) % n;
    slots.push_back({SlotKind::Controlled, target, control, 0});
  }
  return slots;
}

CircuitSpec build_architecture(int n, const std::vector<int> &ranges,
                               bool final_gate) {
  CircuitSpec spec;
  spec.n_qubits = n;
  for (int r : ranges) {
    auto block = build_block(n, r);
    spec.slots.insert(spec.slots.end(), block.begin(), block.end());
  }
  if (final_gate) {
    spec.slots.push_back({SlotKind::Single, 0, std::nullopt, 0});
  }
  int offset = 0;
  for (GateSlot &slot : spec.slots) {
    slot.param_offset = offset;
    offset += slot_param_width(slot.kind);
  }
  spec.param_len = offset;
  return spec;
}

int gate_count(int n, const std::vector<int> &ranges) {
  int count = 0;
  for (int r : ranges) {
    check_range(n, r);
    count += n + block_layer_size(n, r);
  }
  return count;
}

namespace {

GateParams slot_gate_params(const GateSlot &slot,
                            const std::vector<double> &theta) {
  return {theta[slot.param_offset], theta[slot.param_offset + 1],
          theta[slot.param_offset + 2]};
}

}  // namespace

namespace detail {

void apply_slot_inplace(StateVector &s, const GateSlot &slot,
                        const std::vector<double> &theta) {
  switch (slot.kind) {
    case SlotKind::Single:
      detail::apply_single_inplace(s, gate_matrix(slot_gate_params(slot, theta)),
                                   slot.target);
      break;
    case SlotKind::Controlled:
      detail::apply_controlled_inplace(
          s, gate_matrix(slot_gate_params(slot, theta)), *slot.control,
          slot.target);
      break;
    case SlotKind::ControlledPhase:
      detail::apply_controlled_phase_inplace(
          s, theta[slot.param_offset] * slot.param_scale, *slot.control,
          slot.target);
      break;
    case SlotKind::XRotation:
      detail::apply_single_inplace(
          s, x_rotation_matrix(theta[slot.param_offset] * slot.param_scale),
          slot.target);
      break;
  }
}

}  // namespace detail

namespace {

void check_execution_args(const CircuitSpec &spec,
                          const std::vector<double> &theta,
                          const StateVector &s,
                          const std::vector<bool> *mask) {
  if (static_cast<int>(theta.size()) != spec.param_len) {
    throw DimensionError("apply_circuit: theta has " +
                         std::to_string(theta.size()) + " entries, circuit needs " +
                         std::to_string(spec.param_len));
  }
  if (s.n_qubits != spec.n_qubits) {
    throw DimensionError("apply_circuit: state register of " +
                         std::to_string(s.n_qubits) + " qubits, circuit has " +
                         std::to_string(spec.n_qubits));
  }
  if (mask != nullptr && mask->size() != spec.slots.size()) {
    throw DimensionError("apply_circuit: mask size mismatch");
  }
}

bool slot_masked(const std::vector<bool> *mask, std::size_t i) {
  return mask != nullptr && (*mask)[i];
}

}  // namespace

StateVector apply_circuit(const CircuitSpec &spec,
                          const std::vector<double> &theta,
                          const StateVector &s,
                          const std::vector<bool> *mask) {
  check_execution_args(spec, theta, s, mask);
  StateVector out = s;
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    if (slot_masked(mask, i)) continue;
    detail::apply_slot_inplace(out, spec.slots[i], theta);
  }
  return out;
}

std::vector<std::pair<double, StateVector>> apply_circuit_derivative(
    const CircuitSpec &spec, const std::vector<double> &theta, int mu,
    const StateVector &s, const std::vector<bool> *mask) {
  if (mu < 0 || mu >= spec.param_len) {
    throw DimensionError("apply_circuit_derivative: parameter index " +
                         std::to_string(mu) + " out of range");
  }
  const int slot_idx = spec.slot_of_param(mu);
  const auto wrt =
      static_cast<GateAngle>(mu - spec.slots[slot_idx].param_offset);
  return apply_circuit_derivative_slot(spec, theta, slot_idx, wrt, s, mask);
}

std::vector<std::pair<double, StateVector>> apply_circuit_derivative_slot(
    const CircuitSpec &spec, const std::vector<double> &theta, int slot_idx,
    GateAngle wrt, const StateVector &s, const std::vector<bool> *mask) {
  check_execution_args(spec, theta, s, mask);
  const GateSlot &slot = spec.slots.at(slot_idx);
  if (slot.kind == SlotKind::ControlledPhase ||
      slot.kind == SlotKind::XRotation) {
    throw UnsupportedDerivativeError(
        "apply_circuit_derivative: compiled-form slots (controlled phase / "
        "x-rotation) are not differentiable; train the generator-form circuit");
  }
  if (slot_masked(mask, slot_idx)) return {};

  const GateParams p = slot_gate_params(slot, theta);
  const auto terms = slot.kind == SlotKind::Single
                         ? derivative_terms(p, wrt)
                         : controlled_derivative_terms(p, wrt);

  StateVector prefix = s;
  for (int i = 0; i < slot_idx; ++i) {
    if (slot_masked(mask, i)) continue;
    detail::apply_slot_inplace(prefix, spec.slots[i], theta);
  }

  std::vector<std::pair<double, StateVector>> out;
  out.reserve(terms.size());
  for (const DerivativeTerm &term : terms) {
    StateVector st = prefix;
    Mat2 g = gate_matrix(term.params);
    if (term.block_sign < 0) g = -g;
    if (slot.kind == SlotKind::Single) {
      detail::apply_single_inplace(st, g, slot.target);
    } else {
      detail::apply_controlled_inplace(st, g, *slot.control, slot.target);
    }
    for (std::size_t i = slot_idx + 1; i < spec.slots.size(); ++i) {
      if (slot_masked(mask, i)) continue;
      detail::apply_slot_inplace(st, spec.slots[i], theta);
    }
    out.emplace_back(term.coefficient, std::move(st));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block compilation (normalized form).
// ---------------------------------------------------------------------------

namespace {

struct EigComponents {
  Mat2 q;        // unitary eigenbasis, G = q * diag * q^dag
  double lambda; // arg of the first eigenvalue
  double phi;    // relative phase of the second eigenvalue
};

EigComponents eigendecompose_unitary(const Mat2 &g) {
  if (g.is_scalar(1e-12)) {
    if (std::abs(g.m00 - cplx{1.0, 0.0}) <= 1e-9) {
      return {Mat2::identity(), 0.0, 0.0};
    }
    throw DegenerateGateError(
        "controlled gate is a pure global phase and cannot be compiled");
  }
  if (g.is_diagonal(1e-14)) {
    const double l0 = std::arg(g.m00);
    return {Mat2::identity(), l0, std::arg(g.m11) - l0};
  }
  const cplx tr = g.m00 + g.m11;
  const cplx disc = std::sqrt(tr * tr - 4.0 * g.det());
  cplx mu0 = 0.5 * (tr + disc);
  cplx mu1 = 0.5 * (tr - disc);
  // Eigenvector of mu0 from the larger row of (G - mu0 I).
  cplx v0, v1;
  if (std::abs(g.m01) >= std::abs(g.m10)) {
    v0 = g.m01;
    v1 = mu0 - g.m00;
  } else {
    v0 = mu0 - g.m11;
    v1 = g.m10;
  }
  const double inv = 1.0 / std::sqrt(std::norm(v0) + std::norm(v1));
  v0 *= inv;
  v1 *= inv;
  // Second column: the orthogonal complement (eigenvector of mu1 for any
  // normal matrix).
  Mat2 q{v0, -std::conj(v1), v1, std::conj(v0)};
  const double l0 = std::arg(mu0);
  return {q, l0, std::arg(mu1) - l0};
}

Mat2 phase_diag(double lambda) { return phase_gate_matrix(lambda); }

}  // namespace

CompiledBlock compile_block_matrices(int n, int r,
                                     const std::vector<Mat2> &singles,
                                     const std::vector<Mat2> &controlled) {
  check_range(n, r);
  const int m = block_layer_size(n, r);
  if (static_cast<int>(singles.size()) != n ||
      static_cast<int>(controlled.size()) != m) {
    throw DimensionError("compile_block: expected " + std::to_string(n) +
                         " single and " + std::to_string(m) +
                         " controlled gate matrices");
  }

  std::vector<Mat2> head = singles;          // pending single layer
  std::vector<Mat2> tail(n, Mat2::identity());  // diagonal carry-out

  // The cycle-closing gate (j = 1, target qubit 0) sits between two
  // controlled phases on qubit 0, so its eigenbasis cannot merge into the
  // single layer. Gauge the eigenvectors so that Q^dag = R_X(x) R_Z(z):
  // the Z part still reaches the head, the X part stays as a rotation slot,
  // and the inverse on the far side contributes the tied rotation -x plus a
  // diagonal that joins the tail.
  const EigComponents wrap = eigendecompose_unitary(controlled[m - 1]);
  const ZxzAngles wrap_zxz = zxz_decompose(wrap.q.dagger());

  struct Emitted {
    SlotKind kind;
    int target;
    int control;       // -1 for rotations
    double angle;
    int shared_with;   // index of an earlier emitted slot whose parameter
                       // this one reuses with scale -1; -1 otherwise
  };
  std::vector<Emitted> emitted;

  int wrap_xrot_index = -1;
  for (int e = 0; e < m; ++e) {
    const int j = m - e;
    const int control = (j * r) % n;
    const int target = ((j - 1) * r) % n;
    if (j == 1) {
      tail[control] = tail[control] * phase_diag(wrap.lambda);
      head[target] = rz_matrix(wrap_zxz.z_right) * head[target];
      emitted.push_back(
          {SlotKind::ControlledPhase, target, control, wrap.phi, -1});
      emitted.push_back(
          {SlotKind::XRotation, target, -1, -wrap_zxz.x, wrap_xrot_index});
      tail[target] = tail[target] * rz_matrix(-wrap_zxz.z_right);
      continue;
    }
    const EigComponents eig = eigendecompose_unitary(controlled[e]);
    if (j == m) {
      head[control] = phase_diag(eig.lambda) * head[control];
    } else {
      tail[control] = tail[control] * phase_diag(eig.lambda);
    }
    const ZxzAngles q_zxz = zxz_decompose(eig.q);
    head[target] = rz_matrix(q_zxz.z_right) * eig.q.dagger() * head[target];
    emitted.push_back({SlotKind::ControlledPhase, target, control, eig.phi, -1});
    emitted.push_back({SlotKind::XRotation, target, -1, q_zxz.x, -1});
    tail[target] = tail[target] * rz_matrix(q_zxz.z_left);
    if (j == m && m >= 2) {
      // Wrap rotation: the +x half of the tied pair, placed between the two
      // controlled phases that pin qubit 0.
      wrap_xrot_index = static_cast<int>(emitted.size());
      emitted.push_back({SlotKind::XRotation, 0, -1, wrap_zxz.x, -1});
    }
  }

  CompiledBlock block;
  block.spec.n_qubits = n;
  int offset = 0;
  for (int q = 0; q < n; ++q) {
    const GateParams p = gate_params_from_su2(su2_normalize(head[q]));
    block.spec.slots.push_back({SlotKind::Single, q, std::nullopt, offset});
    block.params.push_back(p.alpha);
    block.params.push_back(p.beta);
    block.params.push_back(p.gamma);
    offset += 3;
  }
  std::vector<int> emitted_offsets(emitted.size(), -1);
  for (std::size_t i = 0; i < emitted.size(); ++i) {
    const Emitted &em = emitted[i];
    GateSlot slot;
    slot.kind = em.kind;
    slot.target = em.target;
    if (em.control >= 0) slot.control = em.control;
    if (em.shared_with >= 0) {
      slot.param_offset = emitted_offsets[em.shared_with];
      slot.param_scale = -1.0;
    } else {
      slot.param_offset = offset;
      block.params.push_back(em.angle);
      offset += 1;
    }
    emitted_offsets[i] = slot.param_offset;
    block.spec.slots.push_back(slot);
  }
  block.spec.param_len = offset;

  block.residual_phases.assign(n, 0.0);
  for (int q = 0; q < n; ++q) {
    // The tail is diagonal; keep its relative phase, drop the global one.
    block.residual_phases[q] = std::arg(tail[q].m11) - std::arg(tail[q].m00);
  }
  return block;
}

CompiledBlock compile_block(int n, int r, const std::vector<double> &theta_block) {
  check_range(n, r);
  const int m = block_layer_size(n, r);
  if (static_cast<int>(theta_block.size()) != 3 * (n + m)) {
    throw DimensionError("compile_block: block over " + std::to_string(n) +
                         " qubits at range " + std::to_string(r) + " needs " +
                         std::to_string(3 * (n + m)) + " parameters, got " +
                         std::to_string(theta_block.size()));
  }
  std::vector<Mat2> singles(n), controlled(m);
  for (int q = 0; q < n; ++q) {
    singles[q] = gate_matrix(
        {theta_block[3 * q], theta_block[3 * q + 1], theta_block[3 * q + 2]});
  }
  for (int e = 0; e < m; ++e) {
    const int base = 3 * (n + e);
    controlled[e] = gate_matrix(
        {theta_block[base], theta_block[base + 1], theta_block[base + 2]});
  }
  return compile_block_matrices(n, r, singles, controlled);
}

StateVector apply_compiled_block(const CompiledBlock &block,
                                 const StateVector &s) {
  StateVector out = apply_circuit(block.spec, block.params, s);
  for (int q = 0; q < block.spec.n_qubits; ++q) {
    if (block.residual_phases[q] != 0.0) {
      detail::apply_single_inplace(out, phase_gate_matrix(block.residual_phases[q]),
                                   q);
    }
  }
  return out;
}

}  // namespace qvc
