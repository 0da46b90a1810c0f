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

#include <cstddef>
#include <vector>

#include "qvc/rng.hpp"
#include "qvc/types.hpp"

namespace qvc {

/// Dense complex statevector of an n-qubit register. Qubit 0 is the MOST
/// significant bit of the basis-state index, so measuring qubit 0 in state 1
/// corresponds to the contiguous upper half of the amplitude vector.
struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amps;
  /// Set by from_amplitudes when normalization moved the input by > 1e-10.
  bool renormalized = false;

  std::size_t dim() const { return amps.size(); }
  double norm_sq() const;

  /// Index bit mask of qubit q (MSB-first convention).
  std::size_t qubit_mask(int q) const {
    return std::size_t{1} << (n_qubits - 1 - q);
  }
};

/// Maximum register width; defaults to 24, overridable with QVC_MAX_QUBITS.
int max_qubits();

/// |0...0> on n qubits. Throws CapacityError for n < 1 or n > max_qubits().
StateVector ground_state(int n);

/// Builds a state from raw amplitudes (length must be a power of two,
/// nonzero norm). The vector is renormalized to unit norm; `renormalized`
/// records whether that changed it by more than 1e-10.
StateVector from_amplitudes(std::vector<cplx> v);

/// Applies a 2x2 unitary to the target qubit. Validates unitarity to 1e-10.
StateVector apply_single(const StateVector &s, const Mat2 &g, int target);

/// Applies g on the target qubit within the subspace where the control is 1.
StateVector apply_controlled(const StateVector &s, const Mat2 &g, int control,
                             int target);

/// Multiplies amplitudes with both bits set by e^{i phi}; symmetric in (a, b).
StateVector apply_controlled_phase(const StateVector &s, double phi, int a,
                                   int b);

/// Probability of measuring qubit q in state 1.
double prob_qubit_one(const StateVector &s, int q);

/// <a|b> with conjugation on a.
cplx inner_product(const StateVector &a, const StateVector &b);

/// One measurement sample of qubit q: 1 with probability prob_qubit_one.
int sample_qubit(const StateVector &s, int q, Rng &rng);

/// Eigenvalues of the reduced density matrix over `subset` (|subset| <= 12),
/// in descending order. They are non-negative and sum to 1.
std::vector<double> reduced_density_eigenvalues(const StateVector &s,
                                                const std::vector<int> &subset);

/// |<a|b>|, the phase-insensitive overlap used in state comparisons.
double fidelity(const StateVector &a, const StateVector &b);

namespace detail {
// In-place kernels without unitarity validation, for hot loops where the
// matrices are unitary by construction, and for the gradient oracle which
// deliberately applies non-unitary derivative matrices.
void apply_single_inplace(StateVector &s, const Mat2 &g, int target);
void apply_controlled_inplace(StateVector &s, const Mat2 &g, int control,
                              int target);
void apply_controlled_phase_inplace(StateVector &s, double phi, int a, int b);
// Zeroes every amplitude whose control bit is 0 (gradient oracle support).
void project_control_one(StateVector &s, int control);
void check_qubit(const StateVector &s, int q, const char *what);
}  // namespace detail

}  // namespace qvc
