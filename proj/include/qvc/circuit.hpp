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

#include <optional>
#include <vector>

#include "qvc/gates.hpp"
#include "qvc/statevec.hpp"

namespace qvc {

enum class SlotKind { Single, Controlled, ControlledPhase, XRotation };

/// Width of a slot's parameter range: 3 for Single/Controlled (alpha, beta,
/// gamma), 1 for ControlledPhase/XRotation.
int slot_param_width(SlotKind kind);

/// One gate position in a circuit. param_offset indexes the flat theta
/// vector; param_scale multiplies the read value (used only for the tied
/// rotation pair emitted by the block compiler).
struct GateSlot {
  SlotKind kind = SlotKind::Single;
  int target = 0;
  std::optional<int> control;
  int param_offset = 0;
  double param_scale = 1.0;

  bool touches(int qubit) const {
    return target == qubit || (control.has_value() && *control == qubit);
  }
};

/// An ordered gate list over n qubits plus the total parameter count.
/// Slots are applied in list order (slots[0] first).
struct CircuitSpec {
  int n_qubits = 0;
  std::vector<GateSlot> slots;
  int param_len = 0;

  /// Index of the slot owning parameter mu.
  int slot_of_param(int mu) const;
};

/// One code block: a layer of n single-qubit gates (qubits ascending)
/// followed by the cyclic layer of n/gcd(n,r) controlled gates at control
/// range r. The controlled layer is emitted in the execution order that
/// realizes the block's operator product (the gate with control qubit 0
/// comes first).
std::vector<GateSlot> build_block(int n, int r);

/// Concatenates blocks for the given ranges; if final_gate, appends one
/// extra single-qubit gate on qubit 0 before measurement. Parameter offsets
/// are assigned in slot order.
CircuitSpec build_architecture(int n, const std::vector<int> &ranges,
                               bool final_gate);

/// K*n + sum_k n/gcd(n, r_k): parametrized gates excluding any final gate.
int gate_count(int n, const std::vector<int> &ranges);

/// Applies the circuit to a state. theta.size() must equal param_len.
/// Slots for which mask[i] is true are skipped (dropout freezing).
StateVector apply_circuit(const CircuitSpec &spec,
                          const std::vector<double> &theta,
                          const StateVector &s,
                          const std::vector<bool> *mask = nullptr);

/// States produced by the classical-LCU derivative expansion with respect
/// to parameter mu: one output per derivative term of the owning slot, each
/// the full circuit run with that slot replaced by the term's gate.
/// Returns 1-2 entries for Single slots and 2-4 for Controlled slots;
/// empty when the owning slot is masked out.
std::vector<std::pair<double, StateVector>> apply_circuit_derivative(
    const CircuitSpec &spec, const std::vector<double> &theta, int mu,
    const StateVector &s, const std::vector<bool> *mask = nullptr);

/// Same expansion for one explicit slot occurrence (supports tied
/// parameters, where the product rule sums over occurrences).
std::vector<std::pair<double, StateVector>> apply_circuit_derivative_slot(
    const CircuitSpec &spec, const std::vector<double> &theta, int slot_index,
    GateAngle wrt, const StateVector &s,
    const std::vector<bool> *mask = nullptr);

/// Result of rewriting one code block into the normalized form
///   singles layer -> [controlled-phase, x-rotation] pairs -> diagonal tail.
/// spec/params hold the normalized-form gates; their parameter count is at
/// most 5n (3n singles + 2 per controlled gate, with the closing pair of
/// the control cycle sharing one tied rotation angle). residual_phases is
/// the diagonal remainder commuted out of the block: one phase per qubit,
/// to be applied after the block (a following block would absorb it into
/// its single-qubit layer; before a measurement it is unobservable).
struct CompiledBlock {
  CircuitSpec spec;
  std::vector<double> params;
  std::vector<double> residual_phases;

  int param_count() const { return spec.param_len; }
};

/// Rewrites the block (n, r, theta_block) per the diagonalization procedure:
/// each controlled gate G = Q D Q^dag becomes a controlled phase conjugated
/// by Q, the Q^dag factors merge into the preceding single layer, the
/// control-side phases commute out, and the residual Q factors split into
/// Z-X-Z rotations whose diagonal parts migrate to the layer boundaries.
/// Throws DegenerateGateError when a controlled gate is a pure global phase
/// other than the identity.
CompiledBlock compile_block(int n, int r, const std::vector<double> &theta_block);

/// Matrix-level variant (test support: admits non-SU(2) unitaries such as a
/// plain CNOT block). `singles` has n entries, `controlled` one entry per
/// controlled slot in block execution order.
CompiledBlock compile_block_matrices(int n, int r,
                                     const std::vector<Mat2> &singles,
                                     const std::vector<Mat2> &controlled);

/// Applies a compiled block including its diagonal residual.
StateVector apply_compiled_block(const CompiledBlock &block,
                                 const StateVector &s);

namespace detail {
/// Applies one slot in place, reading its parameters from theta.
void apply_slot_inplace(StateVector &s, const GateSlot &slot,
                        const std::vector<double> &theta);
}  // namespace detail

}  // namespace qvc
