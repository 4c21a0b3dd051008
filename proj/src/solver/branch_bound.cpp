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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "hsc/simd/kernels.hpp"
#include "hsc/solver/simplex.hpp"

namespace hsc {
namespace {

struct BoundChange {
  int col;
  double lower;
  double upper;
};

struct Node {
  double bound;
  long id;
  std::vector<BoundChange> changes;
  Basis basis;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    return std::tie(a.bound, a.id) > std::tie(b.bound, b.id);
  }
};

double fractionality(double v) {
  const double f = v - std::floor(v);
  return std::min(f, 1.0 - f);
}

class BranchAndBound {
 public:
  BranchAndBound(const MilpInstance& inst, const LpModel& model, const SolverOptions& opt)
      : inst_(inst), model_(model), opt_(opt), engine_(model, opt) {
    for (int j = 0; j < model.cols; ++j) {
      if (model.integer[j]) ints_.push_back(j);
    }
  }

  Solution run();

 private:
  // Resets the engine to root bounds plus the given changes.
  void apply(const std::vector<BoundChange>& changes) {
    for (int j : touched_) engine_.set_col_bounds(j, model_.col_lower[j], model_.col_upper[j]);
    touched_.clear();
    for (const BoundChange& c : changes) {
      const double lo = std::max(engine_.col_lower(c.col), c.lower);
      const double hi = std::min(engine_.col_upper(c.col), c.upper);
      engine_.set_col_bounds(c.col, lo, std::max(lo, hi));
      touched_.push_back(c.col);
    }
  }
  bool feasible_bounds(const std::vector<BoundChange>& changes) const {
    for (const BoundChange& c : changes) {
      if (c.lower > c.upper) return false;
    }
    return true;
  }
  // Most fractional integer column of the highest priority, lowest index on
  // ties; -1 if integral.
  int branch_column(const std::vector<double>& x) const {
    int best = -1;
    int best_p = 0;
    double best_f = opt_.integrality_tol;
    for (int j : ints_) {
      const double f = fractionality(x[j]);
      if (f <= opt_.integrality_tol) continue;
      const int p = model_.priority[j];
      if (best < 0 || p > best_p || (p == best_p && f > best_f)) {
        best_p = p;
        best_f = f;
        best = j;
      }
    }
    return best;
  }
  bool out_of_time() const {
    if (opt_.time_limit_seconds <= 0.0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count() >
           opt_.time_limit_seconds;
  }
  void offer(double obj, const std::vector<double>& x) {
    if (obj < incumbent_obj_) {
      incumbent_obj_ = obj;
      incumbent_ = x;
    }
  }
  bool prunable(double bound) const {
    if (incumbent_.empty()) return false;
    return bound >= incumbent_obj_ - opt_.gap_tol * std::max(std::fabs(incumbent_obj_), 1e-9);
  }
  void dive(const Basis& root_basis);
  // All integer columns at their lower bound (else upper, else 0).
  void trivial_point(const Basis& root_basis);

  const MilpInstance& inst_;
  const LpModel& model_;
  SolverOptions opt_;
  LpEngine engine_;
  std::vector<int> ints_;
  std::vector<int> touched_;
  std::vector<double> incumbent_;
  double incumbent_obj_ = std::numeric_limits<double>::infinity();
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
  long lp_solves_ = 0;
};

void BranchAndBound::dive(const Basis& root_basis) {
  std::vector<BoundChange> changes;
  // Sizes of `changes` before each committed batch, for backtracking.
  std::vector<size_t> history;
  int backtracks = 0;
  int careful = 0;  // rounds left that commit one column at a time
  auto restore = [&] {
    apply({});
    engine_.set_basis(root_basis);
  };
  for (int round = 0; round < 2000 && !out_of_time(); ++round) {
    const std::vector<double> x = engine_.primal();
    std::vector<int> frac;
    for (int j : ints_) {
      if (fractionality(x[j]) > opt_.integrality_tol) frac.push_back(j);
    }
    if (frac.empty()) {
      offer(engine_.objective(), x);
      break;
    }
    if (prunable(engine_.objective())) break;
    // Priority columns (investment counts) go first and are pinned at their
    // rounded-up value; a short fleet is repaired only at the price of a
    // costlier substitute.
    auto priced = [&](int j) { return model_.priority[j] > 0; };
    std::stable_sort(frac.begin(), frac.end(), [&](int a, int b) {
      if (priced(a) != priced(b)) return priced(a);
      return fractionality(x[a]) < fractionality(x[b]);
    });
    const size_t n_priced = static_cast<size_t>(std::count_if(frac.begin(), frac.end(), priced));
    size_t batch = n_priced > 0 ? n_priced : std::max<size_t>(1, frac.size() / 4);
    if (careful > 0) {
      batch = 1;
      --careful;
    }
    bool moved = false;
    while (!moved) {
      std::vector<BoundChange> trial = changes;
      for (size_t k = 0; k < batch; ++k) {
        const int j = frac[k];
        const double f = x[j] - std::floor(x[j]);
        if (priced(j)) {
          trial.push_back({j, std::ceil(x[j]), std::ceil(x[j])});
        } else if (f < 0.5) {
          trial.push_back({j, -std::numeric_limits<double>::infinity(), std::floor(x[j])});
        } else {
          trial.push_back({j, std::ceil(x[j]), std::numeric_limits<double>::infinity()});
        }
      }
      apply(trial);
      ++lp_solves_;
      if (engine_.solve() == LpStatus::kOptimal) {
        history.push_back(changes.size());
        changes = std::move(trial);
        moved = true;
      } else if (batch > 1) {
        batch /= 2;
      } else {
        // The other direction for the single column.
        BoundChange& c = trial.back();
        const int j = c.col;
        if (std::isfinite(c.upper)) {
          c = {j, std::ceil(x[j]), std::numeric_limits<double>::infinity()};
        } else {
          c = {j, -std::numeric_limits<double>::infinity(), std::floor(x[j])};
        }
        apply(trial);
        ++lp_solves_;
        if (engine_.solve() == LpStatus::kOptimal) {
          history.push_back(changes.size());
          changes = std::move(trial);
          moved = true;
          continue;
        }
        // Dead end: undo the last committed batch and go on one column at
        // a time from there.
        if (history.empty() || ++backtracks > 32) {
          restore();
          return;
        }
        changes.resize(history.back());
        history.pop_back();
        apply(changes);
        ++lp_solves_;
        if (engine_.solve() != LpStatus::kOptimal) {
          restore();
          return;
        }
        careful = 64;
        break;
      }
    }
  }
  restore();
}

void BranchAndBound::trivial_point(const Basis& root_basis) {
  std::vector<BoundChange> fixed;
  for (int j : ints_) {
    const double lo = model_.col_lower[j], hi = model_.col_upper[j];
    const double v = std::isfinite(lo) ? std::ceil(lo) : std::isfinite(hi) ? std::floor(hi) : 0.0;
    fixed.push_back({j, v, v});
  }
  apply(fixed);
  ++lp_solves_;
  if (engine_.solve() == LpStatus::kOptimal) offer(engine_.objective(), engine_.primal());
  apply({});
  engine_.set_basis(root_basis);
}

Solution BranchAndBound::run() {
  Solution sol;
  sol.stats.kernels = std::string(simd::to_string(simd::active().isa));
  auto finish = [&](SolveStatus status, double bound, long nodes) {
    sol.status = status;
    sol.stats.iterations = engine_.iterations();
    sol.stats.nodes = nodes;
    sol.stats.best_bound = bound;
    if (!incumbent_.empty()) {
      std::vector<std::string> keys;
      keys.reserve(incumbent_.size());
      for (const Variable& v : inst_.vars.all()) keys.push_back(v.key);
      sol.objective = inst_.objective_value(incumbent_);
      sol.assign(std::move(keys), incumbent_);
      sol.stats.gap = (sol.objective - bound) / std::max(std::fabs(sol.objective), 1e-9);
      if (sol.stats.gap < 0.0) sol.stats.gap = 0.0;
    }
    sol.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    return sol;
  };

  const LpStatus root = engine_.solve();
  ++lp_solves_;
  if (root != LpStatus::kOptimal) {
    switch (root) {
      case LpStatus::kInfeasible: return finish(SolveStatus::kInfeasible, 0.0, 1);
      case LpStatus::kUnbounded: return finish(SolveStatus::kUnbounded, 0.0, 1);
      default: return finish(SolveStatus::kIterationLimit, 0.0, 1);
    }
  }
  const double root_bound = engine_.objective();
  const Basis root_basis = engine_.basis();
  {
    const std::vector<double> x = engine_.primal();
    if (branch_column(x) < 0) {
      offer(root_bound, x);
      return finish(SolveStatus::kOptimal, root_bound, 1);
    }
  }
  if (opt_.dive) dive(root_basis);
  if (incumbent_.empty()) trivial_point(root_basis);

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long next_id = 0;
  long nodes = 0;
  open.push(Node{root_bound, next_id++, {}, root_basis});
  double global_bound = root_bound;
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    global_bound = node.bound;
    if (prunable(node.bound)) {
      // Best-first: every remaining node is at least as bad.
      global_bound = std::min(node.bound, incumbent_obj_);
      while (!open.empty()) open.pop();
      break;
    }
    if (nodes >= opt_.node_limit || out_of_time()) {
      return finish(SolveStatus::kNodeLimit, global_bound, nodes);
    }
    ++nodes;
    apply(node.changes);
    if (node.id != 0) engine_.set_basis(node.basis);
    const LpStatus st = engine_.solve();
    ++lp_solves_;
    if (st == LpStatus::kInfeasible) continue;
    if (st != LpStatus::kOptimal) continue;  // treated as pruned; bound stays valid
    const double obj = engine_.objective();
    if (prunable(obj)) continue;
    const std::vector<double> x = engine_.primal();
    const int j = branch_column(x);
    if (j < 0) {
      offer(obj, x);
      continue;
    }
    const Basis b = engine_.basis();
    Node down{obj, next_id++, node.changes, b};
    down.changes.push_back({j, -std::numeric_limits<double>::infinity(), std::floor(x[j])});
    Node upn{obj, next_id++, node.changes, b};
    upn.changes.push_back({j, std::ceil(x[j]), std::numeric_limits<double>::infinity()});
    open.push(std::move(down));
    open.push(std::move(upn));
  }
  if (incumbent_.empty()) return finish(SolveStatus::kInfeasible, global_bound, nodes);
  if (open.empty() && global_bound > incumbent_obj_) global_bound = incumbent_obj_;
  return finish(SolveStatus::kOptimal, std::min(global_bound, incumbent_obj_), std::max(nodes, 1L));
}

}  // namespace

Solution solve_milp(const MilpInstance& instance, const SolverOptions& options) {
  const LpModel model = LpModel::from_instance(instance);
  if (model.trivially_infeasible) {
    Solution s;
    s.status = SolveStatus::kInfeasible;
    return s;
  }
  BranchAndBound bb(instance, model, options);
  return bb.run();
}

}  // namespace hsc
