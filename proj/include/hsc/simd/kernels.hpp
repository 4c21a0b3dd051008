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

// Dense vector kernels used by the simplex inner loops. Each kernel has a
// portable scalar reference and, on x86-64, an AVX2/FMA variant selected at
// first use from the CPU feature flags. HSC_PLAN_SIMD=scalar forces the
// reference path.
//
// Selection kernels (price, ratio_pass1, ratio_pass2) return results that
// are bit-identical across variants. Reductions (dot, axpy) may differ in
// the last bits because lanes are summed in a different order.

#ifndef HSC_SIMD_KERNELS_HPP_
#define HSC_SIMD_KERNELS_HPP_

#include <cstddef>
#include <string_view>

namespace hsc::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

struct Candidate {
  long index = -1;   // -1 when no entry qualifies
  double score = 0.0;
};

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  // Largest violation max(up[j] * -d[j], down[j] * d[j]) above tol; up/down
  // hold 1.0 where the variable may move in that direction, else 0.0.
  // First index wins ties.
  Candidate (*price)(const double* d, const double* up, const double* down,
                     std::size_t n, double tol);
  // As price, but over qualifying entries maximizes v * v / weight[j];
  // score holds that ratio.
  Candidate (*price_weighted)(const double* d, const double* up, const double* down,
                              const double* weight, std::size_t n, double tol);
  // Basic values move as x - theta * w. Returns the smallest step that
  // drives any x past lo/hi relaxed by feas_tol, over |w| > piv_tol.
  // +inf when nothing blocks.
  double (*ratio_pass1)(const double* x, const double* lo, const double* hi,
                        const double* w, std::size_t n, double piv_tol,
                        double feas_tol);
  // Among entries whose exact-bound step is <= theta_max, the one with the
  // largest |w| (first index on ties). score holds its exact step, clamped
  // at 0.
  Candidate (*ratio_pass2)(const double* x, const double* lo, const double* hi,
                           const double* w, std::size_t n, double piv_tol,
                           double theta_max);
};

const KernelTable& scalar_kernels();
// Null when the variant is not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();
// The table chosen for this process.
const KernelTable& active();

}  // namespace hsc::simd

#endif  // HSC_SIMD_KERNELS_HPP_
