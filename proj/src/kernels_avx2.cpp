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

#ifdef QVC_HAVE_AVX2

#include <immintrin.h>

// AVX2+FMA gate kernels. A __m256d holds two interleaved complex doubles
// [re0, im0, re1, im1]. Strided pair updates vectorize over the contiguous
// lower/upper runs of the target bit; the stride-1 cases use in-register
// shuffles instead of scalar fallbacks.

namespace qvc::kernels {
namespace {

// (c_re + i*c_im) * v for two packed complex values, where c_re/c_im hold
// the scalar broadcast into all lanes.
inline __m256d cmul(__m256d c_re, __m256d c_im, __m256d v) {
  __m256d t = _mm256_mul_pd(c_im, v);
  t = _mm256_permute_pd(t, 0x5);  // swap (re, im) within each complex
  return _mm256_fmaddsub_pd(c_re, v, t);
}

inline __m256d cmul_add(__m256d c_re, __m256d c_im, __m256d v, __m256d acc) {
  return _mm256_add_pd(acc, cmul(c_re, c_im, v));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

struct GateRegs {
  __m256d a_re, a_im, b_re, b_im, c_re, c_im, d_re, d_im;
  explicit GateRegs(const Mat2 &g)
      : a_re(_mm256_set1_pd(g.m00.real())), a_im(_mm256_set1_pd(g.m00.imag())),
        b_re(_mm256_set1_pd(g.m01.real())), b_im(_mm256_set1_pd(g.m01.imag())),
        c_re(_mm256_set1_pd(g.m10.real())), c_im(_mm256_set1_pd(g.m10.imag())),
        d_re(_mm256_set1_pd(g.m11.real())), d_im(_mm256_set1_pd(g.m11.imag())) {
  }
};

// Pair update for two complex values per register, lower run at p, upper at
// p + tmask. Requires run length >= 2.
inline void pair_update_run(double *lo, double *hi, std::size_t run_len,
                            const GateRegs &r) {
  for (std::size_t i = 0; i < run_len; i += 2) {
    __m256d x = _mm256_loadu_pd(lo + 2 * i);
    __m256d y = _mm256_loadu_pd(hi + 2 * i);
    __m256d nx = cmul_add(r.b_re, r.b_im, y, cmul(r.a_re, r.a_im, x));
    __m256d ny = cmul_add(r.d_re, r.d_im, y, cmul(r.c_re, r.c_im, x));
    _mm256_storeu_pd(lo + 2 * i, nx);
    _mm256_storeu_pd(hi + 2 * i, ny);
  }
}

// Adjacent-pair update: one register holds [x, y] of a single pair. Used
// when the target is the least significant index bit (tmask == 1).
inline void pair_update_adjacent(double *p, std::size_t n_pairs,
                                 const Mat2 &g) {
  const __m256d col0_re = _mm256_setr_pd(g.m00.real(), g.m00.real(),
                                         g.m10.real(), g.m10.real());
  const __m256d col0_im = _mm256_setr_pd(g.m00.imag(), g.m00.imag(),
                                         g.m10.imag(), g.m10.imag());
  const __m256d col1_re = _mm256_setr_pd(g.m01.real(), g.m01.real(),
                                         g.m11.real(), g.m11.real());
  const __m256d col1_im = _mm256_setr_pd(g.m01.imag(), g.m01.imag(),
                                         g.m11.imag(), g.m11.imag());
  for (std::size_t i = 0; i < n_pairs; ++i) {
    __m256d v = _mm256_loadu_pd(p + 4 * i);
    __m256d x = _mm256_permute2f128_pd(v, v, 0x00);  // [x, x]
    __m256d y = _mm256_permute2f128_pd(v, v, 0x11);  // [y, y]
    __m256d out = cmul_add(col1_re, col1_im, y, cmul(col0_re, col0_im, x));
    _mm256_storeu_pd(p + 4 * i, out);
  }
}

void apply_single_avx2(cplx *amps, std::size_t dim, std::size_t tmask,
                       const Mat2 &g) {
  double *d = reinterpret_cast<double *>(amps);
  if (dim < 4) {
    scalar_table().apply_single(amps, dim, tmask, g);
    return;
  }
  if (tmask == 1) {
    pair_update_adjacent(d, dim / 2, g);
    return;
  }
  const GateRegs r(g);
  for (std::size_t base = 0; base < dim; base += 2 * tmask) {
    pair_update_run(d + 2 * base, d + 2 * (base + tmask), tmask, r);
  }
}

void apply_controlled_avx2(cplx *amps, std::size_t dim, std::size_t cmask,
                           std::size_t tmask, const Mat2 &g) {
  double *d = reinterpret_cast<double *>(amps);
  if (dim < 8) {
    scalar_table().apply_controlled(amps, dim, cmask, tmask, g);
    return;
  }
  if (tmask == 1) {
    // Adjacent pairs, restricted to regions where the control bit is set.
    for (std::size_t base = cmask; base < dim; base += 2 * cmask) {
      pair_update_adjacent(d + 2 * base, cmask / 2, g);
    }
    return;
  }
  const GateRegs r(g);
  if (cmask > tmask) {
    for (std::size_t cbase = cmask; cbase < dim; cbase += 2 * cmask) {
      for (std::size_t base = cbase; base < cbase + cmask; base += 2 * tmask) {
        pair_update_run(d + 2 * base, d + 2 * (base + tmask), tmask, r);
      }
    }
    return;
  }
  // cmask < tmask: control bit varies inside each lower run.
  if (cmask >= 2) {
    for (std::size_t base = 0; base < dim; base += 2 * tmask) {
      for (std::size_t sub = base + cmask; sub < base + tmask;
           sub += 2 * cmask) {
        pair_update_run(d + 2 * sub, d + 2 * (sub + tmask), cmask, r);
      }
    }
    return;
  }
  // cmask == 1: odd complexes within each run participate; compute the
  // update for both lanes and blend the even (control 0) lane back.
  for (std::size_t base = 0; base < dim; base += 2 * tmask) {
    double *lo = d + 2 * base;
    double *hi = d + 2 * (base + tmask);
    for (std::size_t i = 0; i < tmask; i += 2) {
      __m256d x = _mm256_loadu_pd(lo + 2 * i);
      __m256d y = _mm256_loadu_pd(hi + 2 * i);
      __m256d nx = cmul_add(r.b_re, r.b_im, y, cmul(r.a_re, r.a_im, x));
      __m256d ny = cmul_add(r.d_re, r.d_im, y, cmul(r.c_re, r.c_im, x));
      _mm256_storeu_pd(lo + 2 * i, _mm256_blend_pd(x, nx, 0xC));
      _mm256_storeu_pd(hi + 2 * i, _mm256_blend_pd(y, ny, 0xC));
    }
  }
}

void apply_controlled_phase_avx2(cplx *amps, std::size_t dim,
                                 std::size_t amask, std::size_t bmask,
                                 cplx phase) {
  double *d = reinterpret_cast<double *>(amps);
  const std::size_t hi = amask > bmask ? amask : bmask;
  const std::size_t lo = amask > bmask ? bmask : amask;
  if (lo < 2 || dim < 8) {
    scalar_table().apply_controlled_phase(amps, dim, amask, bmask, phase);
    return;
  }
  const __m256d p_re = _mm256_set1_pd(phase.real());
  const __m256d p_im = _mm256_set1_pd(phase.imag());
  for (std::size_t h = hi; h < dim; h += 2 * hi) {
    for (std::size_t l = h + lo; l < h + hi; l += 2 * lo) {
      double *run = d + 2 * l;
      for (std::size_t i = 0; i < lo; i += 2) {
        __m256d v = _mm256_loadu_pd(run + 2 * i);
        _mm256_storeu_pd(run + 2 * i, cmul(p_re, p_im, v));
      }
    }
  }
}

double prob_one_avx2(const cplx *amps, std::size_t dim, std::size_t mask) {
  const double *d = reinterpret_cast<const double *>(amps);
  if (mask < 2 || dim < 8) {
    return scalar_table().prob_one(amps, dim, mask);
  }
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t base = mask; base < dim; base += 2 * mask) {
    const double *run = d + 2 * base;
    for (std::size_t i = 0; i < mask; i += 2) {
      __m256d v = _mm256_loadu_pd(run + 2 * i);
      acc = _mm256_fmadd_pd(v, v, acc);
    }
  }
  return hsum(acc);
}

cplx inner_product_avx2(const cplx *a, const cplx *b, std::size_t dim) {
  if (dim < 4) {
    return scalar_table().inner_product(a, b, dim);
  }
  const double *da = reinterpret_cast<const double *>(a);
  const double *db = reinterpret_cast<const double *>(b);
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (std::size_t i = 0; i < dim; i += 2) {
    __m256d va = _mm256_loadu_pd(da + 2 * i);
    __m256d vb = _mm256_loadu_pd(db + 2 * i);
    // conj(a)*b: re = a.re*b.re + a.im*b.im, im = a.re*b.im - a.im*b.re.
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    __m256d vbs = _mm256_permute_pd(vb, 0x5);          // [b.im, b.re]
    vbs = _mm256_mul_pd(vbs, sign);                    // [b.im, -b.re]
    acc_im = _mm256_fmadd_pd(va, vbs, acc_im);
  }
  return {hsum(acc_re), hsum(acc_im)};
}

}  // namespace

const KernelTable &avx2_table() {
  static const KernelTable table{apply_single_avx2, apply_controlled_avx2,
                                 apply_controlled_phase_avx2, prob_one_avx2,
                                 inner_product_avx2};
  return table;
}

bool avx2_compiled() { return true; }

}  // namespace qvc::kernels

#else  // !QVC_HAVE_AVX2

namespace qvc::kernels {

const KernelTable &avx2_table() { return scalar_table(); }
bool avx2_compiled() { return false; }

}  // namespace qvc::kernels

#endif
