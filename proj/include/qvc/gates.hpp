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

#include <vector>

#include "qvc/types.hpp"

namespace qvc {

/// The three angles of a trainable single-qubit gate. The global phase of
/// the underlying four-parameter form is dropped, which leaves SU(2)
/// matrices. Angles are stored unwrapped (no reduction mod 2pi) so descent
/// trajectories stay smooth.
struct GateParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

enum class GateAngle { Alpha, Beta, Gamma };

/// One summand of a gate derivative expressed as a weighted sum of unitary
/// gates. For controlled gates, block_sign = -1 means the 2x2 block inside
/// the controlled gate is negated (-G is still unitary, so every term stays
/// an executable circuit).
struct DerivativeTerm {
  double coefficient = 1.0;
  GateParams params;
  int block_sign = +1;
};

/// [[e^{ib} cos a, e^{ig} sin a], [-e^{-ig} sin a, e^{-ib} cos a]].
/// Determinant is exactly 1.
Mat2 gate_matrix(const GateParams &p);

/// diag(1, e^{i phi}).
Mat2 phase_gate_matrix(double phi);

/// cos(theta/2) I - i sin(theta/2) sigma_x.
Mat2 x_rotation_matrix(double theta);

/// Entrywise analytic derivative of gate_matrix with respect to one angle
/// (closed form, used by the direct-differentiation oracle).
Mat2 gate_matrix_derivative(const GateParams &p, GateAngle wrt);

/// Expands d/d(wrt) of a single-qubit gate into unitary terms:
///   alpha: G(a + pi/2, b, g)                          (1 term, coeff 1)
///   beta:  1/2 G(a, b + pi/2, 0) + 1/2 G(a, b + pi/2, pi)
///   gamma: 1/2 G(a, 0, g + pi/2) + 1/2 G(a, pi, g + pi/2)
std::vector<DerivativeTerm> derivative_terms(const GateParams &p,
                                             GateAngle wrt);

/// Derivative of a controlled gate: each single-gate term t splits into
/// +t/2 with block sign +1 and -t/2 with block sign -1, giving a list of
/// 2 (alpha) or 4 (beta, gamma) controlled terms.
std::vector<DerivativeTerm> controlled_derivative_terms(const GateParams &p,
                                                        GateAngle wrt);

/// Divides out the determinant phase: returns V with det V = 1 and
/// V = U * e^{-i arg(det U)/2} for unitary U.
Mat2 su2_normalize(const Mat2 &u);

/// Recovers the (alpha, beta, gamma) angles of an SU(2) matrix, inverting
/// gate_matrix up to global sign.
GateParams gate_params_from_su2(const Mat2 &v);

/// Angles of U = e^{i delta} R_Z(z_left) R_X(x) R_Z(z_right) for unitary U
/// (R_Z(t) = diag(e^{-it/2}, e^{it/2})).
struct ZxzAngles {
  double delta = 0.0;
  double z_left = 0.0;
  double x = 0.0;
  double z_right = 0.0;
};
ZxzAngles zxz_decompose(const Mat2 &u);

Mat2 rz_matrix(double theta);

}  // namespace qvc
