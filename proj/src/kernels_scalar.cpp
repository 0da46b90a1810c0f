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

#include "qvc/kernels.hpp"

namespace qvc::kernels {
namespace {

void apply_single_scalar(cplx *amps, std::size_t dim, std::size_t tmask,
                         const Mat2 &g) {
  for (std::size_t base = 0; base < dim; base += 2 * tmask) {
    for (std::size_t i = base; i < base + tmask; ++i) {
      const cplx x = amps[i];
      const cplx y = amps[i | tmask];
      amps[i] = g.m00 * x + g.m01 * y;
      amps[i | tmask] = g.m10 * x + g.m11 * y;
    }
  }
}

void apply_controlled_scalar(cplx *amps, std::size_t dim, std::size_t cmask,
                             std::size_t tmask, const Mat2 &g) {
  for (std::size_t base = 0; base < dim; base += 2 * tmask) {
    for (std::size_t i = base; i < base + tmask; ++i) {
      if ((i & cmask) == 0) continue;
      const cplx x = amps[i];
      const cplx y = amps[i | tmask];
      amps[i] = g.m00 * x + g.m01 * y;
      amps[i | tmask] = g.m10 * x + g.m11 * y;
    }
  }
}

void apply_controlled_phase_scalar(cplx *amps, std::size_t dim,
                                   std::size_t amask, std::size_t bmask,
                                   cplx phase) {
  const std::size_t both = amask | bmask;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & both) == both) amps[i] *= phase;
  }
}

double prob_one_scalar(const cplx *amps, std::size_t dim, std::size_t mask) {
  double p = 0.0;
  for (std::size_t base = mask; base < dim; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      p += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
  }
  return p;
}

cplx inner_product_scalar(const cplx *a, const cplx *b, std::size_t dim) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable &scalar_table() {
  static const KernelTable table{apply_single_scalar, apply_controlled_scalar,
                                 apply_controlled_phase_scalar, prob_one_scalar,
                                 inner_product_scalar};
  return table;
}

}  // namespace qvc::kernels
