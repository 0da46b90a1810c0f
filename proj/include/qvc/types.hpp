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

#include <cmath>
#include <complex>
#include <cstddef>

namespace qvc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Row-major 2x2 complex matrix. The basic currency of single-qubit gates.
struct Mat2 {
  cplx m00{1.0, 0.0}, m01{0.0, 0.0};
  cplx m10{0.0, 0.0}, m11{1.0, 0.0};

  static Mat2 identity() { return {}; }

  Mat2 dagger() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  cplx det() const { return m00 * m11 - m01 * m10; }

  Mat2 operator*(const Mat2 &o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }

  Mat2 operator*(cplx s) const { return {s * m00, s * m01, s * m10, s * m11}; }

  Mat2 operator+(const Mat2 &o) const {
    return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
  }

  Mat2 operator-() const { return {-m00, -m01, -m10, -m11}; }

  /// max |entry| of (this - o).
  double max_abs_diff(const Mat2 &o) const {
    double d = std::abs(m00 - o.m00);
    d = std::max(d, std::abs(m01 - o.m01));
    d = std::max(d, std::abs(m10 - o.m10));
    return std::max(d, std::abs(m11 - o.m11));
  }

  /// ||U†U - I||_max; zero for exactly unitary U.
  double unitarity_defect() const {
    Mat2 p = dagger() * (*this);
    p.m00 -= 1.0;
    p.m11 -= 1.0;
    double d = std::abs(p.m00);
    d = std::max(d, std::abs(p.m01));
    d = std::max(d, std::abs(p.m10));
    return std::max(d, std::abs(p.m11));
  }

  bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

  /// Entrywise closeness to a scalar multiple of the identity.
  bool is_scalar(double tol = 1e-12) const {
    return std::abs(m01) <= tol && std::abs(m10) <= tol &&
           std::abs(m00 - m11) <= tol;
  }

  bool is_diagonal(double tol = 1e-12) const {
    return std::abs(m01) <= tol && std::abs(m10) <= tol;
  }
};

}  // namespace qvc
