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

#include "support/fixtures.hpp"

#include <random>

namespace hsc::testing {
namespace {

using Terms = std::vector<std::pair<int, double>>;

Fixture make(std::string name) {
  Fixture f;
  f.name = std::move(name);
  f.instance.name = f.name;
  return f;
}

}  // namespace

std::vector<Fixture> hand_lps() {
  std::vector<Fixture> out;
  {
    // min x s.t. x >= 3.
    Fixture f = make("bound_row");
    int x = f.instance.vars.add("x", 0.0, kInf, 1.0);
    f.instance.add_row("r", RowFamily::kOther, RowSense::kGreaterEqual, 3.0, {{x, 1.0}});
    f.objective = 3.0;
    f.point = {3.0};
    out.push_back(std::move(f));
  }
  {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18. Tableau pivots
    // y then x end at (2, 6).
    Fixture f = make("two_var_product_mix");
    int x = f.instance.vars.add("x", 0.0, kInf, -3.0);
    int y = f.instance.vars.add("y", 0.0, kInf, -5.0);
    f.instance.add_row("a", RowFamily::kOther, RowSense::kLessEqual, 4.0, {{x, 1.0}});
    f.instance.add_row("b", RowFamily::kOther, RowSense::kLessEqual, 12.0, {{y, 2.0}});
    f.instance.add_row("c", RowFamily::kOther, RowSense::kLessEqual, 18.0, {{x, 3.0}, {y, 2.0}});
    f.objective = -36.0;
    f.point = {2.0, 6.0};
    out.push_back(std::move(f));
  }
  {
    // Two plants (supply 20, 30) to two markets (demand 25, 25); unit
    // costs 4 6 / 5 3. Cheapest: p1->m1 20, p2->m1 5, p2->m2 25.
    Fixture f = make("transport_2x2");
    auto& v = f.instance.vars;
    int a = v.add("p1m1", 0.0, kInf, 4.0);
    int b = v.add("p1m2", 0.0, kInf, 6.0);
    int c = v.add("p2m1", 0.0, kInf, 5.0);
    int d = v.add("p2m2", 0.0, kInf, 3.0);
    f.instance.add_row("s1", RowFamily::kOther, RowSense::kLessEqual, 20.0, {{a, 1.0}, {b, 1.0}});
    f.instance.add_row("s2", RowFamily::kOther, RowSense::kLessEqual, 30.0, {{c, 1.0}, {d, 1.0}});
    f.instance.add_row("m1", RowFamily::kOther, RowSense::kEqual, 25.0, {{a, 1.0}, {c, 1.0}});
    f.instance.add_row("m2", RowFamily::kOther, RowSense::kEqual, 25.0, {{b, 1.0}, {d, 1.0}});
    f.objective = 80.0 + 25.0 + 75.0;
    f.point = {20.0, 0.0, 5.0, 25.0};
    out.push_back(std::move(f));
  }
  {
    // Free variable and an upper-bounded one: min -x - 2y, x + y = 1,
    // x free, 0 <= y <= 4 -> y = 4, x = -3.
    Fixture f = make("free_and_upper");
    int x = f.instance.vars.add("x", -kInf, kInf, -1.0);
    int y = f.instance.vars.add("y", 0.0, 4.0, -2.0);
    f.instance.add_row("e", RowFamily::kOther, RowSense::kEqual, 1.0, {{x, 1.0}, {y, 1.0}});
    f.objective = 3.0 - 8.0;
    f.point = {-3.0, 4.0};
    out.push_back(std::move(f));
  }
  {
    // Degenerate vertex: three constraints through (1, 1).
    // min -x - y, x <= 1, y <= 1, x + y <= 2, x - y <= 0.
    Fixture f = make("degenerate_vertex");
    int x = f.instance.vars.add("x", 0.0, kInf, -1.0);
    int y = f.instance.vars.add("y", 0.0, kInf, -1.0);
    f.instance.add_row("a", RowFamily::kOther, RowSense::kLessEqual, 1.0, {{x, 1.0}});
    f.instance.add_row("b", RowFamily::kOther, RowSense::kLessEqual, 1.0, {{y, 1.0}});
    f.instance.add_row("c", RowFamily::kOther, RowSense::kLessEqual, 2.0, {{x, 1.0}, {y, 1.0}});
    f.instance.add_row("d", RowFamily::kOther, RowSense::kLessEqual, 0.0, {{x, 1.0}, {y, -1.0}});
    f.objective = -2.0;
    f.point = {1.0, 1.0};
    out.push_back(std::move(f));
  }
  {
    // Ranged row 2 <= x + y <= 5 (RANGES semantics on an L row), min x + 2y
    // with y >= 0.5 -> y = 0.5, x = 1.5.
    Fixture f = make("ranged_row");
    int x = f.instance.vars.add("x", 0.0, kInf, 1.0);
    int y = f.instance.vars.add("y", 0.5, kInf, 2.0);
    Row& r = f.instance.add_row("rg", RowFamily::kOther, RowSense::kLessEqual, 5.0,
                                {{x, 1.0}, {y, 1.0}});
    r.range = 3.0;
    r.has_range = true;
    f.objective = 2.5;
    f.point = {1.5, 0.5};
    out.push_back(std::move(f));
  }
  {
    // Negative lower bounds and a >= row: min 2x + 3y, x + y >= -1,
    // x, y in [-2, 2]. On x + y = -1 the cost is -3 - x, so x = 1, y = -2.
    Fixture f = make("negative_bounds");
    int x = f.instance.vars.add("x", -2.0, 2.0, 2.0);
    int y = f.instance.vars.add("y", -2.0, 2.0, 3.0);
    f.instance.add_row("g", RowFamily::kOther, RowSense::kGreaterEqual, -1.0,
                       {{x, 1.0}, {y, 1.0}});
    f.objective = -4.0;
    f.point = {1.0, -2.0};
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fixture> random_lps(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5), nvar(2, 4), nrow(1, 4), sense(0, 2),
      lo(-3, 0), width(1, 6), rhs(-4, 12), cost(-5, 5);
  std::vector<Fixture> out;
  for (int k = 0; k < count; ++k) {
    Fixture f = make("random_lp_" + std::to_string(k));
    const int n = nvar(rng);
    for (int j = 0; j < n; ++j) {
      const double l = lo(rng);
      f.instance.vars.add("x" + std::to_string(j), l, l + width(rng), cost(rng));
    }
    const int m = nrow(rng);
    for (int i = 0; i < m; ++i) {
      Terms t;
      for (int j = 0; j < n; ++j) t.emplace_back(j, coef(rng));
      const int s = sense(rng);
      const RowSense rs = s == 0 ? RowSense::kEqual : s == 1 ? RowSense::kLessEqual
                                                              : RowSense::kGreaterEqual;
      f.instance.add_row("r" + std::to_string(i), RowFamily::kOther, rs, rhs(rng), t);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fixture> milp_fixtures(int random_count, unsigned seed) {
  std::vector<Fixture> out;
  {
    // Knapsack: max 5a + 4b + 3c, 2a + 3b + c <= 5, a, b, c in {0..2}.
    // Best by hand enumeration: a = 2, c = 1 (weight 5, value 13).
    Fixture f = make("knapsack_3");
    auto& v = f.instance.vars;
    int a = v.add("a", 0.0, 2.0, -5.0, true);
    int b = v.add("b", 0.0, 2.0, -4.0, true);
    int c = v.add("c", 0.0, 2.0, -3.0, true);
    f.instance.add_row("w", RowFamily::kOther, RowSense::kLessEqual, 5.0,
                       {{a, 2.0}, {b, 3.0}, {c, 1.0}});
    f.objective = -13.0;
    f.point = {2.0, 0.0, 1.0};
    out.push_back(std::move(f));
  }
  {
    // LP optimum already integral: one node.
    Fixture f = make("integral_root");
    int x = f.instance.vars.add("x", 0.0, 10.0, 1.0, true);
    f.instance.add_row("r", RowFamily::kOther, RowSense::kGreaterEqual, 4.0, {{x, 1.0}});
    f.objective = 4.0;
    f.point = {4.0};
    out.push_back(std::move(f));
  }
  {
    // Mixed: min -x - y, 2x + 2y <= 7, x integer in [0, 5], y in [0, 1].
    // y = 1 -> x <= 2.5 -> x = 2, obj -3; y = 0.5 with x = 3 -> -3.5.
    Fixture f = make("mixed_cut");
    int x = f.instance.vars.add("x", 0.0, 5.0, -1.0, true);
    int y = f.instance.vars.add("y", 0.0, 1.0, -1.0);
    f.instance.add_row("r", RowFamily::kOther, RowSense::kLessEqual, 7.0, {{x, 2.0}, {y, 2.0}});
    f.objective = -3.5;
    f.point = {3.0, 0.5};
    out.push_back(std::move(f));
  }
  {
    // Integer infeasible although the relaxation is feasible: 2x = 1.
    Fixture f = make("parity_infeasible");
    int x = f.instance.vars.add("x", 0.0, 3.0, 1.0, true);
    f.instance.add_row("r", RowFamily::kOther, RowSense::kEqual, 1.0, {{x, 2.0}});
    out.push_back(std::move(f));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 6), nint(1, 6), ncont(0, 2), nrow(1, 3),
      rhs(2, 14), cost(-6, 3), ub(1, 3), sense(0, 3);
  for (int k = 0; k < random_count; ++k) {
    Fixture f = make("random_milp_" + std::to_string(k));
    const int ni = nint(rng);
    const int nc = ncont(rng);
    for (int j = 0; j < ni; ++j) {
      f.instance.vars.add("i" + std::to_string(j), 0.0, ub(rng), cost(rng), true);
    }
    for (int j = 0; j < nc; ++j) {
      f.instance.vars.add("c" + std::to_string(j), 0.0, ub(rng), cost(rng));
    }
    const int m = nrow(rng);
    for (int i = 0; i < m; ++i) {
      Terms t;
      for (int j = 0; j < ni + nc; ++j) t.emplace_back(j, coef(rng));
      const int s = sense(rng);
      const RowSense rs = s == 0 ? RowSense::kEqual
                                 : s == 3 ? RowSense::kGreaterEqual : RowSense::kLessEqual;
      const double b = rs == RowSense::kGreaterEqual ? -rhs(rng) : rhs(rng);
      f.instance.add_row("r" + std::to_string(i), RowFamily::kOther, rs, b, t);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out = hand_lps();
  for (auto& f : random_lps(40, 7)) out.push_back(std::move(f));
  for (auto& f : milp_fixtures(40, 11)) out.push_back(std::move(f));
  return out;
}

}  // namespace hsc::testing
