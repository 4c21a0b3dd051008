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

#include <cmath>
#include <limits>

#include "hsc/simd/kernels.hpp"

namespace hsc::simd {
namespace {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

Candidate price(const double* d, const double* up, const double* down,
                std::size_t n, double tol) {
  Candidate best;
  best.score = tol;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = std::fmax(up[j] * -d[j], down[j] * d[j]);
    if (v > best.score) {
      best.score = v;
      best.index = static_cast<long>(j);
    }
  }
  if (best.index < 0) best.score = 0.0;
  return best;
}

Candidate price_weighted(const double* d, const double* up, const double* down,
                         const double* weight, std::size_t n, double tol) {
  Candidate best;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = std::fmax(up[j] * -d[j], down[j] * d[j]);
    if (!(v > tol)) continue;
    const double s = v * v / weight[j];
    if (s > best.score) {
      best.score = s;
      best.index = static_cast<long>(j);
    }
  }
  return best;
}

double ratio_pass1(const double* x, const double* lo, const double* hi,
                   const double* w, std::size_t n, double piv_tol,
                   double feas_tol) {
  double theta = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double r;
    if (w[i] > piv_tol) {
      r = (x[i] - lo[i] + feas_tol) / w[i];
    } else if (w[i] < -piv_tol) {
      r = (hi[i] - x[i] + feas_tol) / -w[i];
    } else {
      continue;
    }
    theta = std::fmin(theta, r);
  }
  return theta;
}

Candidate ratio_pass2(const double* x, const double* lo, const double* hi,
                      const double* w, std::size_t n, double piv_tol,
                      double theta_max) {
  Candidate best;
  double best_w = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
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
    if (r <= theta_max && a > best_w) {
      best_w = a;
      best.index = static_cast<long>(i);
      best.score = r;
    }
  }
  return best;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar, dot,         axpy,        max_abs,
                                 price,        price_weighted, ratio_pass1, ratio_pass2};
  return table;
}

}  // namespace hsc::simd
