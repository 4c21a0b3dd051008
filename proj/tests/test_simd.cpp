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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hsc/simd/kernels.hpp"

using namespace hsc::simd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vectors {
  std::vector<double> x, lo, hi, w, d, up, down;
};

// Values drawn from a small grid so ties are common.
Vectors draw(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int> grid(-8, 8), kind(0, 9);
  Vectors v;
  for (size_t i = 0; i < n; ++i) {
    const double l = grid(rng) * 0.5;
    const int k = kind(rng);
    v.lo.push_back(k == 0 ? -kInf : l);
    v.hi.push_back(k == 1 ? kInf : l + std::abs(grid(rng)) * 0.25);
    const double lo_f = std::isfinite(v.lo.back()) ? v.lo.back() : v.hi.back() - 3.0;
    v.x.push_back(lo_f + (k == 2 ? -1e-9 : std::abs(grid(rng)) * 0.125));
    v.w.push_back(k == 3 ? 0.0 : k == 4 ? 1e-12 : grid(rng) * 0.25);
    v.d.push_back(k == 5 ? -0.0 : grid(rng) * 0.125);
    v.up.push_back(kind(rng) < 6 ? 1.0 : 0.0);
    v.down.push_back(kind(rng) < 6 ? 1.0 : 0.0);
  }
  return v;
}

bool same_bits(double a, double b) {
  return std::bit_cast<unsigned long long>(a) == std::bit_cast<unsigned long long>(b);
}

}  // namespace

TEST_CASE("selection kernels are bit-identical to the scalar reference") {
  const KernelTable* fast = avx2_kernels();
  if (fast == nullptr) {
    MESSAGE("AVX2 variant not available on this CPU; scalar only");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(2024);
  for (size_t n = 0; n < 70; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const Vectors v = draw(rng, n);
      CAPTURE(n);
      const Candidate a = ref.price(v.d.data(), v.up.data(), v.down.data(), n, 1e-9);
      const Candidate b = fast->price(v.d.data(), v.up.data(), v.down.data(), n, 1e-9);
      CHECK(a.index == b.index);
      CHECK(same_bits(a.score, b.score));

      // Weights on a coarse grid as well, so weighted ties occur too.
      std::vector<double> weight(n);
      for (size_t j = 0; j < n; ++j) weight[j] = 1.0 + static_cast<double>(j % 3);
      const Candidate wa = ref.price_weighted(v.d.data(), v.up.data(), v.down.data(),
                                              weight.data(), n, 1e-9);
      const Candidate wb = fast->price_weighted(v.d.data(), v.up.data(), v.down.data(),
                                                weight.data(), n, 1e-9);
      CHECK(wa.index == wb.index);
      CHECK(same_bits(wa.score, wb.score));

      const double t1 = ref.ratio_pass1(v.x.data(), v.lo.data(), v.hi.data(), v.w.data(), n,
                                        1e-9, 1e-7);
      const double t2 = fast->ratio_pass1(v.x.data(), v.lo.data(), v.hi.data(), v.w.data(), n,
                                          1e-9, 1e-7);
      CHECK(same_bits(t1, t2));

      for (double theta : {0.0, 0.5, t1, kInf}) {
        const Candidate c = ref.ratio_pass2(v.x.data(), v.lo.data(), v.hi.data(), v.w.data(),
                                            n, 1e-9, theta);
        const Candidate e = fast->ratio_pass2(v.x.data(), v.lo.data(), v.hi.data(),
                                              v.w.data(), n, 1e-9, theta);
        CHECK(c.index == e.index);
        CHECK(same_bits(c.score, e.score));
      }

      CHECK(same_bits(ref.max_abs(v.w.data(), n), fast->max_abs(v.w.data(), n)));
    }
  }
}

TEST_CASE("reductions agree with the scalar reference to rounding") {
  const KernelTable* fast = avx2_kernels();
  if (fast == nullptr) return;
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(-1e3, 1e3);
  for (size_t n = 0; n < 200; n += 7) {
    std::vector<double> x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = val(rng);
      y[i] = val(rng);
    }
    double mag = 0.0;
    for (size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y[i]);
    CHECK(std::abs(ref.dot(x.data(), y.data(), n) - fast->dot(x.data(), y.data(), n)) <=
          1e-14 * (1.0 + mag));
    std::vector<double> y1 = y, y2 = y;
    ref.axpy(0.37, x.data(), y1.data(), n);
    fast->axpy(0.37, x.data(), y2.data(), n);
    for (size_t i = 0; i < n; ++i) {
      CHECK(std::abs(y1[i] - y2[i]) <= 1e-13 * (1.0 + std::abs(y1[i])));
    }
  }
}

TEST_CASE("scalar kernels on hand cases") {
  const KernelTable& k = scalar_kernels();
  const double d[] = {0.5, -2.0, 3.0, -2.0};
  const double up[] = {1, 1, 0, 1};
  const double down[] = {1, 1, 1, 1};
  // Violations: 0.5, 2, 3, 2 -> index 2.
  Candidate c = k.price(d, up, down, 4, 1e-9);
  CHECK(c.index == 2);
  CHECK(c.score == 3.0);
  // Nothing above the tolerance.
  c = k.price(d, up, down, 4, 10.0);
  CHECK(c.index == -1);
  // Weighted: 0.25/1, 4/4, 9/9, 4/1 -> index 3.
  const double weight[] = {1.0, 4.0, 9.0, 1.0};
  c = k.price_weighted(d, up, down, weight, 4, 1e-9);
  CHECK(c.index == 3);
  CHECK(c.score == 4.0);
  c = k.price_weighted(d, up, down, weight, 4, 10.0);
  CHECK(c.index == -1);

  const double x[] = {1.0, 2.0, 0.0};
  const double lo[] = {0.0, 0.0, -kInf};
  const double hi[] = {kInf, 4.0, kInf};
  const double w[] = {1.0, -1.0, 0.5};
  // Steps to the bounds: 1, 2, inf (row 2 is unbounded below).
  CHECK(k.ratio_pass1(x, lo, hi, w, 3, 1e-9, 0.0) == 1.0);
  c = k.ratio_pass2(x, lo, hi, w, 3, 1e-9, 2.0);
  CHECK(c.index == 0);  // |w| ties between 0 and 1; first index wins
  CHECK(c.score == 1.0);
}

TEST_CASE("active table honours HSC_PLAN_SIMD") {
  const char* env = std::getenv("HSC_PLAN_SIMD");
  if (env != nullptr && std::string(env) == "scalar") {
    CHECK(active().isa == Isa::kScalar);
  } else if (avx2_kernels() != nullptr) {
    CHECK(active().isa == Isa::kAvx2);
  } else {
    CHECK(active().isa == Isa::kScalar);
  }
}
