// Copyright 2026 The hsc-plan Authors
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

// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma
// and is only entered after a runtime CPU check.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "hsc/simd/kernels.hpp"

namespace hsc::simd {
namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  }
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double max_abs(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(x[i]));
  return r;
}

// Per-lane (value, index) tracking; strict comparisons keep the first
// index inside a lane, the final reduction breaks ties by lowest index.
Candidate reduce(__m256d best, __m256d idx) {
  alignas(32) double v[4];
  alignas(32) double k[4];
  _mm256_store_pd(v, best);
  _mm256_store_pd(k, idx);
  Candidate c;
  double bv = 0.0;
  for (int l = 0; l < 4; ++l) {
    if (k[l] < 0.0) continue;
    if (c.index < 0 || v[l] > bv || (v[l] == bv && static_cast<long>(k[l]) < c.index)) {
      bv = v[l];
      c.index = static_cast<long>(k[l]);
    }
  }
  c.score = bv;
  return c;
}

Candidate price(const double* d, const double* up, const double* down,
                std::size_t n, double tol) {
  __m256d best = _mm256_set1_pd(tol);
  __m256d best_idx = _mm256_set1_pd(-1.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vd = _mm256_loadu_pd(d + j);
    const __m256d inc = _mm256_mul_pd(_mm256_loadu_pd(up + j), _mm256_sub_pd(zero, vd));
    const __m256d dec = _mm256_mul_pd(_mm256_loadu_pd(down + j), vd);
    const __m256d v = _mm256_max_pd(inc, dec);
    const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
    best = _mm256_blendv_pd(best, v, gt);
    best_idx = _mm256_blendv_pd(best_idx, idx, gt);
    idx = _mm256_add_pd(idx, four);
  }
  Candidate c = reduce(best, best_idx);
  if (c.index < 0) c.score = tol;
  for (; j < n; ++j) {
    const double v = std::fmax(up[j] * -d[j], down[j] * d[j]);
    if (v > c.score) {
      c.score = v;
      c.index = static_cast<long>(j);
    }
  }
  if (c.index < 0) c.score = 0.0;
  return c;
}

Candidate price_weighted(const double* d, const double* up, const double* down,
                         const double* weight, std::size_t n, double tol) {
  __m256d best = _mm256_setzero_pd();
  __m256d best_idx = _mm256_set1_pd(-1.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d vtol = _mm256_set1_pd(tol);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4, idx = _mm256_add_pd(idx, four)) {
    const __m256d vd = _mm256_loadu_pd(d + j);
    const __m256d inc = _mm256_mul_pd(_mm256_loadu_pd(up + j), _mm256_sub_pd(zero, vd));
    const __m256d dec = _mm256_mul_pd(_mm256_loadu_pd(down + j), vd);
    const __m256d v = _mm256_max_pd(inc, dec);
    const __m256d ok = _mm256_cmp_pd(v, vtol, _CMP_GT_OQ);
    if (_mm256_movemask_pd(ok) == 0) continue;
    const __m256d s = _mm256_div_pd(_mm256_mul_pd(v, v), _mm256_loadu_pd(weight + j));
    const __m256d gt = _mm256_and_pd(ok, _mm256_cmp_pd(s, best, _CMP_GT_OQ));
    best = _mm256_blendv_pd(best, s, gt);
    best_idx = _mm256_blendv_pd(best_idx, idx, gt);
  }
  Candidate c = reduce(best, best_idx);
  if (c.index < 0) c.score = 0.0;
  for (; j < n; ++j) {
    const double v = std::fmax(up[j] * -d[j], down[j] * d[j]);
    if (!(v > tol)) continue;
    const double s = v * v / weight[j];
    if (s > c.score) {
      c.score = s;
      c.index = static_cast<long>(j);
    }
  }
  return c;
}

double ratio_pass1(const double* x, const double* lo, const double* hi,
                   const double* w, std::size_t n, double piv_tol,
                   double feas_tol) {
  const double inf = std::numeric_limits<double>::infinity();
  __m256d theta = _mm256_set1_pd(inf);
  const __m256d vinf = theta;
  const __m256d ptol = _mm256_set1_pd(piv_tol);
  const __m256d mptol = _mm256_set1_pd(-piv_tol);
  const __m256d ftol = _mm256_set1_pd(feas_tol);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vw = _mm256_loadu_pd(w + i);
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d pos = _mm256_cmp_pd(vw, ptol, _CMP_GT_OQ);
    const __m256d neg = _mm256_cmp_pd(vw, mptol, _CMP_LT_OQ);
    if (_mm256_movemask_pd(_mm256_or_pd(pos, neg)) == 0) continue;
    const __m256d r_lo = _mm256_div_pd(
        _mm256_add_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(lo + i)), ftol), vw);
    const __m256d r_hi = _mm256_div_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(hi + i), vx), ftol),
        _mm256_sub_pd(zero, vw));
    __m256d r = _mm256_blendv_pd(vinf, r_lo, pos);
    r = _mm256_blendv_pd(r, r_hi, neg);
    theta = _mm256_min_pd(theta, r);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, theta);
  double t = std::fmin(std::fmin(lanes[0], lanes[1]), std::fmin(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    double r;
    if (w[i] > piv_tol) {
      r = (x[i] - lo[i] + feas_tol) / w[i];
    } else if (w[i] < -piv_tol) {
      r = (hi[i] - x[i] + feas_tol) / -w[i];
    } else {
      continue;
    }
    t = std::fmin(t, r);
  }
  return t;
}

Candidate ratio_pass2(const double* x, const double* lo, const double* hi,
                      const double* w, std::size_t n, double piv_tol,
                      double theta_max) {
  const __m256d ptol = _mm256_set1_pd(piv_tol);
  const __m256d mptol = _mm256_set1_pd(-piv_tol);
  const __m256d tmax = _mm256_set1_pd(theta_max);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d best_w = zero;
  __m256d best_r = zero;
  __m256d best_idx = _mm256_set1_pd(-1.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4, idx = _mm256_add_pd(idx, four)) {
    const __m256d vw = _mm256_loadu_pd(w + i);
    const __m256d pos = _mm256_cmp_pd(vw, ptol, _CMP_GT_OQ);
    const __m256d neg = _mm256_cmp_pd(vw, mptol, _CMP_LT_OQ);
    if (_mm256_movemask_pd(_mm256_or_pd(pos, neg)) == 0) continue;
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d r_lo = _mm256_div_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(lo + i)), vw);
    const __m256d r_hi = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(hi + i), vx),
                                       _mm256_sub_pd(zero, vw));
    __m256d r = _mm256_blendv_pd(r_hi, r_lo, pos);
    r = _mm256_max_pd(r, zero);
    const __m256d a = _mm256_andnot_pd(sign, vw);
    __m256d ok = _mm256_and_pd(_mm256_or_pd(pos, neg), _mm256_cmp_pd(r, tmax, _CMP_LE_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(a, best_w, _CMP_GT_OQ));
    best_w = _mm256_blendv_pd(best_w, a, ok);
    best_r = _mm256_blendv_pd(best_r, r, ok);
    best_idx = _mm256_blendv_pd(best_idx, idx, ok);
  }
  alignas(32) double wv[4];
  alignas(32) double rv[4];
  alignas(32) double kv[4];
  _mm256_store_pd(wv, best_w);
  _mm256_store_pd(rv, best_r);
  _mm256_store_pd(kv, best_idx);
  Candidate c;
  double bw = 0.0;
  for (int l = 0; l < 4; ++l) {
    if (kv[l] < 0.0) continue;
    const long k = static_cast<long>(kv[l]);
    if (wv[l] > bw || (wv[l] == bw && k < c.index)) {
      bw = wv[l];
      c.index = k;
      c.score = rv[l];
    }
  }
  for (; i < n; ++i) {
    double r;
    if (w[i] > piv_tol) {
      r = (x[i] - lo[i]) / w[i];
    } else if (w[i] < -piv_tol) {
      r = (hi[i] - x[i]) / -w[i];
    } else {
      continue;
    }
    r = std::fmax(r, 0.0);
    const double a = std::fabs(w[i]);
    if (r <= theta_max && a > bw) {
      bw = a;
      c.index = static_cast<long>(i);
      c.score = r;
    }
  }
  return c;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2, dot,         axpy,        max_abs,
                                 price,      price_weighted, ratio_pass1, ratio_pass2};
  return table;
}

}  // namespace hsc::simd
