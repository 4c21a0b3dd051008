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

// Reference LP/MILP solver.
//
// LpEngine is a bounded-variable primal revised simplex over the
// formulation [A -I][x; s] = 0 where each logical s_i carries the row
// activity bounds. It starts from the all-logical basis, runs a phase 1 on
// the sum of infeasibilities and then phase 2. Pricing is devex on reduced
// costs updated from the pivot row. The ratio test is a two-pass Harris
// test with bound flips. A run of degenerate pivots triggers a one-shot
// bound perturbation, and Bland's rule if that stalls too. The basis is
// held as a sparse LU with product-form updates and is refactored
// periodically. The model is scaled by powers of two before solving so
// that scaling itself introduces no rounding.
//
// solve_milp runs best-first branch-and-bound on top of LpEngine with warm
// starts from the parent basis.

#ifndef HSC_SOLVER_SIMPLEX_HPP_
#define HSC_SOLVER_SIMPLEX_HPP_

#include <cstdint>
#include <vector>

#include "hsc/lp/instance.hpp"
#include "hsc/solver/solution.hpp"
#include "hsc/solver/sparse_lu.hpp"

namespace hsc {

struct SolverOptions {
  double primal_tol = 1e-7;  // absolute, on the unscaled model
  double dual_tol = 1e-7;    // relative to the largest cost coefficient
  double pivot_tol = 1e-9;
  long max_iterations = 0;   // 0: automatic from the model size
  int refactor_interval = 100;
  // Consecutive degenerate pivots before bounds are perturbed; Bland's rule
  // takes over after ten times as many.
  int bland_after = 50;
  // Branch-and-bound.
  double gap_tol = 1e-4;
  double integrality_tol = 1e-6;
  long node_limit = 20000;
  double time_limit_seconds = 0.0;  // 0: none
  bool dive = true;
};

/// Column-compressed LP data, minimization.
struct LpModel {
  int rows = 0;
  int cols = 0;
  std::vector<int> col_start;
  std::vector<int> row_index;
  std::vector<double> values;
  std::vector<double> cost, col_lower, col_upper, row_lower, row_upper;
  std::vector<char> integer;
  std::vector<int> priority;
  double offset = 0.0;
  // Set when an empty row cannot hold activity 0.
  bool trivially_infeasible = false;

  // Drops empty rows; the only presolve step.
  static LpModel from_instance(const MilpInstance& instance);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

enum class VarState : std::int8_t { kBasic, kAtLower, kAtUpper, kAtZero, kFixed };

struct Basis {
  std::vector<int> head;
  std::vector<VarState> state;
};

class LpEngine {
 public:
  LpEngine(const LpModel& model, const SolverOptions& options);

  // Unscaled structural bounds.
  void set_col_bounds(int j, double lower, double upper);
  double col_lower(int j) const;
  double col_upper(int j) const;

  LpStatus solve(long iteration_budget);
  LpStatus solve() { return solve(default_budget()); }

  double objective() const;
  std::vector<double> primal() const;
  Basis basis() const;
  void set_basis(const Basis& basis);
  long iterations() const { return iterations_; }
  long default_budget() const;

 private:
  void place_nonbasic(int j);
  void perturb();
  void unperturb();
  void refactor();
  void scatter_column(int j, std::vector<double>& out) const;

  SolverOptions opt_;
  int m_ = 0;
  int n_ = 0;
  std::vector<int> col_start_, row_index_;
  std::vector<double> val_;
  std::vector<int> row_start_, row_col_;
  std::vector<double> row_val_;
  std::vector<double> row_scale_, col_scale_;
  double cost_scale_ = 1.0;
  double offset_ = 0.0;
  std::vector<double> cost_, lo_, hi_;   // scaled, size n + m
  std::vector<double> x_;                // nonbasic values, size n + m
  std::vector<double> xb_;               // basic values by position
  std::vector<double> d_;                // reduced costs, size n + m
  std::vector<double> weight_;           // devex reference weights
  std::vector<int> head_, posn_;
  std::vector<VarState> state_;
  SparseLu lu_;
  bool dirty_ = true;
  bool fresh_ = false;
  bool perturbed_ = false;
  std::vector<double> saved_lo_, saved_hi_;
  long iterations_ = 0;
  double ptol_ = 1e-9;
  double dtol_ = 1e-9;
};

/// Solves the LP relaxation (integrality flags are ignored).
Solution solve_lp(const MilpInstance& instance, const SolverOptions& options = {});

/// Best-first branch-and-bound; most-fractional branching within the highest
/// column priority, lowest index on ties; nodes ordered by (bound, creation id).
Solution solve_milp(const MilpInstance& instance, const SolverOptions& options = {});

}  // namespace hsc

#endif  // HSC_SOLVER_SIMPLEX_HPP_
