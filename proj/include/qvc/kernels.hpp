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
#include <string>

#include "qvc/types.hpp"

// Low-level gate kernels over raw amplitude arrays. Two implementations
// exist: a scalar reference (always compiled, the semantic ground truth)
// and an AVX2+FMA variant selected at runtime when the CPU supports it.
// The AVX2 kernels are equivalence-tested against the scalar ones; within
// one implementation, results are bitwise deterministic.
//
// Bit convention everywhere: qubit 0 is the MOST significant bit of the
// basis-state index, so qubit q of an n-qubit register corresponds to
// index bit mask 1 << (n - 1 - q).

namespace qvc::kernels {

struct KernelTable {
  // amps[i], amps[i|t] <- g * (amps[i], amps[i|t]) over all i with bit t clear.
  void (*apply_single)(cplx *amps, std::size_t dim, std::size_t tmask,
                       const Mat2 &g);
  // Same pairwise update, restricted to indices with the control bit set.
  void (*apply_controlled)(cplx *amps, std::size_t dim, std::size_t cmask,
                           std::size_t tmask, const Mat2 &g);
  // amps[i] *= phase for all i with both bits set.
  void (*apply_controlled_phase)(cplx *amps, std::size_t dim, std::size_t amask,
                                 std::size_t bmask, cplx phase);
  // sum of |amps[i]|^2 over indices with the bit set.
  double (*prob_one)(const cplx *amps, std::size_t dim, std::size_t mask);
  // sum of conj(a[i]) * b[i].
  cplx (*inner_product)(const cplx *a, const cplx *b, std::size_t dim);
};

/// Scalar reference kernels (always available).
const KernelTable &scalar_table();

/// AVX2+FMA kernels; nullptr-free only when compiled in. Check
/// avx2_compiled() before using directly.
const KernelTable &avx2_table();
bool avx2_compiled();
bool avx2_supported_at_runtime();

/// The table selected at process start: AVX2 when compiled in and supported,
/// otherwise scalar. Overridable with QVC_SIMD=scalar|avx2|auto.
const KernelTable &active_table();

/// Name of the active implementation ("scalar" or "avx2").
std::string active_name();

}  // namespace qvc::kernels
