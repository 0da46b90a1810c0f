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

#include "qvc/statevec.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qvc/errors.hpp"
#include "qvc/kernels.hpp"

namespace qvc {

namespace detail {

void check_qubit(const StateVector &s, int q, const char *what) {
  if (q < 0 || q >= s.n_qubits) {
    throw DimensionError(std::string(what) + ": qubit index " +
                         std::to_string(q) + " out of range for " +
                         std::to_string(s.n_qubits) + " qubits");
  }
}

void apply_single_inplace(StateVector &s, const Mat2 &g, int target) {
  kernels::active_table().apply_single(s.amps.data(), s.dim(),
                                       s.qubit_mask(target), g);
}

void apply_controlled_inplace(StateVector &s, const Mat2 &g, int control,
                              int target) {
  kernels::active_table().apply_controlled(
      s.amps.data(), s.dim(), s.qubit_mask(control), s.qubit_mask(target), g);
}

void apply_controlled_phase_inplace(StateVector &s, double phi, int a, int b) {
  kernels::active_table().apply_controlled_phase(
      s.amps.data(), s.dim(), s.qubit_mask(a), s.qubit_mask(b),
      std::polar(1.0, phi));
}

void project_control_one(StateVector &s, int control) {
  const std::size_t mask = s.qubit_mask(control);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if ((i & mask) == 0) s.amps[i] = 0.0;
  }
}

}  // namespace detail

double StateVector::norm_sq() const {
  const cplx ip = kernels::active_table().inner_product(amps.data(),
                                                        amps.data(), dim());
  return ip.real();
}

int max_qubits() {
  if (const char *env = std::getenv("QVC_MAX_QUBITS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 24;
}

StateVector ground_state(int n) {
  if (n < 1 || n > max_qubits()) {
    throw CapacityError("ground_state: qubit count " + std::to_string(n) +
                        " outside [1, " + std::to_string(max_qubits()) + "]");
  }
  StateVector s;
  s.n_qubits = n;
  s.amps.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

StateVector from_amplitudes(std::vector<cplx> v) {
  const std::size_t len = v.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw GateError("from_amplitudes: length " + std::to_string(len) +
                    " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  if (n < 1 || n > max_qubits()) {
    throw CapacityError("from_amplitudes: register of " + std::to_string(n) +
                        " qubits outside capacity");
  }
  double nsq = 0.0;
  for (const cplx &a : v) nsq += std::norm(a);
  if (nsq <= 0.0) {
    throw GateError("from_amplitudes: zero vector cannot be normalized");
  }
  const double scale = 1.0 / std::sqrt(nsq);
  StateVector s;
  s.n_qubits = n;
  s.renormalized = std::abs(scale - 1.0) > 1e-10;
  if (s.renormalized) {
    for (cplx &a : v) a *= scale;
  }
  s.amps = std::move(v);
  return s;
}

namespace {

void require_unitary(const Mat2 &g, const char *what) {
  if (!g.is_unitary(1e-10)) {
    throw GateError(std::string(what) + ": matrix is not unitary (defect " +
                    std::to_string(g.unitarity_defect()) + ")");
  }
}

}  // namespace

StateVector apply_single(const StateVector &s, const Mat2 &g, int target) {
  detail::check_qubit(s, target, "apply_single");
  require_unitary(g, "apply_single");
  StateVector out = s;
  detail::apply_single_inplace(out, g, target);
  return out;
}

StateVector apply_controlled(const StateVector &s, const Mat2 &g, int control,
                             int target) {
  detail::check_qubit(s, control, "apply_controlled");
  detail::check_qubit(s, target, "apply_controlled");
  if (control == target) {
    throw GateError("apply_controlled: control equals target (" +
                    std::to_string(control) + ")");
  }
  require_unitary(g, "apply_controlled");
  StateVector out = s;
  detail::apply_controlled_inplace(out, g, control, target);
  return out;
}

StateVector apply_controlled_phase(const StateVector &s, double phi, int a,
                                   int b) {
  detail::check_qubit(s, a, "apply_controlled_phase");
  detail::check_qubit(s, b, "apply_controlled_phase");
  if (a == b) {
    throw GateError("apply_controlled_phase: the two qubits coincide (" +
                    std::to_string(a) + ")");
  }
  StateVector out = s;
  detail::apply_controlled_phase_inplace(out, phi, a, b);
  return out;
}

double prob_qubit_one(const StateVector &s, int q) {
  detail::check_qubit(s, q, "prob_qubit_one");
  return kernels::active_table().prob_one(s.amps.data(), s.dim(),
                                          s.qubit_mask(q));
}

cplx inner_product(const StateVector &a, const StateVector &b) {
  if (a.n_qubits != b.n_qubits) {
    throw DimensionError("inner_product: register sizes differ (" +
                         std::to_string(a.n_qubits) + " vs " +
                         std::to_string(b.n_qubits) + ")");
  }
  return kernels::active_table().inner_product(a.amps.data(), b.amps.data(),
                                               a.dim());
}

double fidelity(const StateVector &a, const StateVector &b) {
  return std::abs(inner_product(a, b));
}

int sample_qubit(const StateVector &s, int q, Rng &rng) {
  return rng.bernoulli(prob_qubit_one(s, q)) ? 1 : 0;
}

std::vector<double> reduced_density_eigenvalues(
    const StateVector &s, const std::vector<int> &subset) {
  if (subset.size() > 12) {
    throw CapacityError("reduced_density_eigenvalues: subset of " +
                        std::to_string(subset.size()) + " qubits exceeds 12");
  }
  std::vector<std::size_t> masks;
  masks.reserve(subset.size());
  for (int q : subset) {
    detail::check_qubit(s, q, "reduced_density_eigenvalues");
    masks.push_back(s.qubit_mask(q));
  }
  const std::size_t sub_dim = std::size_t{1} << subset.size();

  // Reshape |s> into a (subset x rest) matrix M; then rho = M M^dagger.
  std::size_t rest_mask = s.dim() - 1;
  for (std::size_t m : masks) rest_mask &= ~m;
  std::vector<std::size_t> rest_bits;
  for (std::size_t bit = 1; bit < s.dim(); bit <<= 1) {
    if (rest_mask & bit) rest_bits.push_back(bit);
  }
  const std::size_t rest_dim = std::size_t{1} << rest_bits.size();

  Eigen::MatrixXcd m(sub_dim, rest_dim);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      row = (row << 1) | ((i & masks[k]) != 0 ? 1 : 0);
    }
    std::size_t col = 0;
    for (std::size_t k = 0; k < rest_bits.size(); ++k) {
      if (i & rest_bits[k]) col |= std::size_t{1} << k;
    }
    m(row, col) = s.amps[i];
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  std::vector<double> eig(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + sub_dim);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  // Clip the tiny negative values the solver can produce for rank-deficient rho.
  for (double &e : eig) {
    if (e < 0.0 && e > -1e-12) e = 0.0;
  }
  return eig;
}

}  // namespace qvc
