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

#include "qvc/gates.hpp"

#include <cmath>

namespace qvc {

Mat2 gate_matrix(const GateParams &p) {
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  const cplx eb = std::polar(1.0, p.beta);
  const cplx eg = std::polar(1.0, p.gamma);
  return {eb * c, eg * s, -std::conj(eg) * s, std::conj(eb) * c};
}

Mat2 phase_gate_matrix(double phi) {
  return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}

Mat2 x_rotation_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const cplx ms{0.0, -std::sin(theta / 2.0)};
  return {cplx{c, 0.0}, ms, ms, cplx{c, 0.0}};
}

Mat2 rz_matrix(double theta) {
  return {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)};
}

Mat2 gate_matrix_derivative(const GateParams &p, GateAngle wrt) {
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  const cplx eb = std::polar(1.0, p.beta);
  const cplx eg = std::polar(1.0, p.gamma);
  const cplx i{0.0, 1.0};
  switch (wrt) {
    case GateAngle::Alpha:
      return {-eb * s, eg * c, -std::conj(eg) * c, -std::conj(eb) * s};
    case GateAngle::Beta:
      return {i * eb * c, 0.0, 0.0, -i * std::conj(eb) * c};
    case GateAngle::Gamma:
    default:
      return {0.0, i * eg * s, i * std::conj(eg) * s, 0.0};
  }
}

std::vector<DerivativeTerm> derivative_terms(const GateParams &p,
                                             GateAngle wrt) {
  const double half_pi = kPi / 2.0;
  switch (wrt) {
    case GateAngle::Alpha:
      return {{1.0, {p.alpha + half_pi, p.beta, p.gamma}, +1}};
    case GateAngle::Beta:
      return {{0.5, {p.alpha, p.beta + half_pi, 0.0}, +1},
              {0.5, {p.alpha, p.beta + half_pi, kPi}, +1}};
    case GateAngle::Gamma:
    default:
      return {{0.5, {p.alpha, 0.0, p.gamma + half_pi}, +1},
              {0.5, {p.alpha, kPi, p.gamma + half_pi}, +1}};
  }
}

std::vector<DerivativeTerm> controlled_derivative_terms(const GateParams &p,
                                                        GateAngle wrt) {
  std::vector<DerivativeTerm> out;
  for (const DerivativeTerm &t : derivative_terms(p, wrt)) {
    out.push_back({+0.5 * t.coefficient, t.params, +1});
    out.push_back({-0.5 * t.coefficient, t.params, -1});
  }
  return out;
}

Mat2 su2_normalize(const Mat2 &u) {
  const double half_arg = std::arg(u.det()) / 2.0;
  return u * std::polar(1.0, -half_arg);
}

GateParams gate_params_from_su2(const Mat2 &v) {
  GateParams p;
  p.alpha = std::atan2(std::abs(v.m01), std::abs(v.m00));
  p.beta = std::abs(v.m00) > 1e-15 ? std::arg(v.m00) : 0.0;
  p.gamma = std::abs(v.m01) > 1e-15 ? std::arg(v.m01) : 0.0;
  return p;
}

ZxzAngles zxz_decompose(const Mat2 &u) {
  const Mat2 v = su2_normalize(u);
  // v = [[cos(x/2) e^{-i(l+r)/2}, -i sin(x/2) e^{-i(l-r)/2}],
  //      [-i sin(x/2) e^{i(l-r)/2},  cos(x/2) e^{i(l+r)/2}]]
  ZxzAngles z;
  const double cmag = std::abs(v.m00);
  const double smag = std::abs(v.m01);
  z.x = 2.0 * std::atan2(smag, cmag);
  const double sum = cmag > 1e-15 ? -2.0 * std::arg(v.m00) : 0.0;
  const double diff = smag > 1e-15 ? -2.0 * std::arg(v.m01) - kPi : 0.0;
  z.z_left = 0.5 * (sum + diff);
  z.z_right = 0.5 * (sum - diff);
  // Residual global phase between u and the reconstructed SU(2) product.
  const Mat2 rec = rz_matrix(z.z_left) * x_rotation_matrix(z.x) *
                   rz_matrix(z.z_right);
  cplx ratio;
  if (std::abs(rec.m00) > std::abs(rec.m01)) {
    ratio = u.m00 / rec.m00;
  } else {
    ratio = u.m01 / rec.m01;
  }
  z.delta = std::arg(ratio);
  return z;
}

}  // namespace qvc
