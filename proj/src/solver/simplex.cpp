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

#include "hsc/solver/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsc/simd/kernels.hpp"

namespace hsc {
namespace {

double pow2_round(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return 1.0;
  return std::exp2(std::round(std::log2(v)));
}

}  // namespace

LpModel LpModel::from_instance(const MilpInstance& inst) {
  LpModel lp;
  const int n = inst.num_cols();
  lp.cols = n;
  lp.offset = inst.objective_offset;
  lp.cost.resize(n);
  lp.col_lower.resize(n);
  lp.col_upper.resize(n);
  lp.integer.resize(n);
  lp.priority.resize(n);
  for (int j = 0; j < n; ++j) {
    const Variable& v = inst.vars[j];
    lp.cost[j] = v.cost;
    lp.col_lower[j] = v.lower;
    lp.col_upper[j] = v.upper;
    lp.integer[j] = v.integer ? 1 : 0;
    lp.priority[j] = v.priority;
  }
  std::vector<int> row_map(inst.rows.size(), -1);
  std::vector<int> count(n, 0);
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    const Row& row = inst.rows[r];
    if (row.cols.empty()) {
      if (row.lower_activity() > 0.0 || row.upper_activity() < 0.0) {
        lp.trivially_infeasible = true;
      }
      continue;
    }
    row_map[r] = lp.rows++;
    lp.row_lower.push_back(row.lower_activity());
    lp.row_upper.push_back(row.upper_activity());
    for (int c : row.cols) ++count[c];
  }
  lp.col_start.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) lp.col_start[j + 1] = lp.col_start[j] + count[j];
  lp.row_index.resize(lp.col_start[n]);
  lp.values.resize(lp.col_start[n]);
  std::vector<int> fill(lp.col_start.begin(), lp.col_start.end() - 1);
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    if (row_map[r] < 0) continue;
    const Row& row = inst.rows[r];
    for (size_t k = 0; k < row.cols.size(); ++k) {
      const int at = fill[row.cols[k]]++;
      lp.row_index[at] = row_map[r];
      lp.values[at] = row.coefs[k];
    }
  }
  return lp;
}

LpEngine::LpEngine(const LpModel& model, const SolverOptions& options)
    : opt_(options), m_(model.rows), n_(model.cols),
      col_start_(model.col_start), row_index_(model.row_index), val_(model.values),
      offset_(model.offset) {
  const int m = m_;
  const int n = n_;
  const int total = n + m;
  row_scale_.assign(m, 1.0);
  col_scale_.assign(n, 1.0);

  // Geometric scaling, a few alternating passes.
  std::vector<double> rmin(m), rmax(m);
  for (int pass = 0; pass < 6; ++pass) {
    std::fill(rmin.begin(), rmin.end(), std::numeric_limits<double>::infinity());
    std::fill(rmax.begin(), rmax.end(), 0.0);
    for (int j = 0; j < n; ++j) {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        const double a = std::fabs(val_[e]) * col_scale_[j];
        rmin[row_index_[e]] = std::min(rmin[row_index_[e]], a);
        rmax[row_index_[e]] = std::max(rmax[row_index_[e]], a);
      }
    }
    for (int i = 0; i < m; ++i) {
      if (rmax[i] > 0.0) row_scale_[i] = 1.0 / std::sqrt(rmin[i] * rmax[i]);
    }
    for (int j = 0; j < n; ++j) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        const double a = std::fabs(val_[e]) * row_scale_[row_index_[e]];
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      if (hi > 0.0) col_scale_[j] = 1.0 / std::sqrt(lo * hi);
    }
  }
  for (double& r : row_scale_) r = pow2_round(r);
  for (double& c : col_scale_) c = pow2_round(c);
  for (int j = 0; j < n; ++j) {
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      val_[e] *= row_scale_[row_index_[e]] * col_scale_[j];
    }
  }

  cost_.assign(total, 0.0);
  lo_.assign(total, 0.0);
  hi_.assign(total, 0.0);
  double cmax = 0.0;
  for (int j = 0; j < n; ++j) {
    cost_[j] = model.cost[j] * col_scale_[j];
    cmax = std::max(cmax, std::fabs(cost_[j]));
  }
  cost_scale_ = cmax > 0.0 ? pow2_round(1.0 / cmax) : 1.0;
  for (int j = 0; j < n; ++j) {
    cost_[j] *= cost_scale_;
    lo_[j] = model.col_lower[j] / col_scale_[j];
    hi_[j] = model.col_upper[j] / col_scale_[j];
  }
  for (int i = 0; i < m; ++i) {
    lo_[n + i] = model.row_lower[i] * row_scale_[i];
    hi_[n + i] = model.row_upper[i] * row_scale_[i];
  }
  ptol_ = opt_.primal_tol * 1e-2;
  dtol_ = opt_.dual_tol * 1e-2;

  // Row-wise copy for pivot rows.
  row_start_.assign(m + 1, 0);
  for (int e = 0; e < static_cast<int>(row_index_.size()); ++e) ++row_start_[row_index_[e] + 1];
  for (int i = 0; i < m; ++i) row_start_[i + 1] += row_start_[i];
  row_col_.resize(row_index_.size());
  row_val_.resize(row_index_.size());
  {
    std::vector<int> fill(row_start_.begin(), row_start_.end() - 1);
    for (int j = 0; j < n; ++j) {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        const int at = fill[row_index_[e]]++;
        row_col_[at] = j;
        row_val_[at] = val_[e];
      }
    }
  }

  d_.assign(total, 0.0);
  x_.assign(total, 0.0);
  xb_.assign(m, 0.0);
  head_.resize(m);
  posn_.assign(total, -1);
  state_.assign(total, VarState::kAtLower);
  for (int i = 0; i < m; ++i) {
    head_[i] = n + i;
    posn_[n + i] = i;
    state_[n + i] = VarState::kBasic;
  }
  for (int j = 0; j < n; ++j) place_nonbasic(j);
  dirty_ = true;
}

long LpEngine::default_budget() const {
  if (opt_.max_iterations > 0) return opt_.max_iterations;
  return 100000L + 50L * (static_cast<long>(m_) + n_);
}

void LpEngine::place_nonbasic(int j) {
  const double lo = lo_[j];
  const double hi = hi_[j];
  VarState s = state_[j];
  if (lo == hi) {
    s = VarState::kFixed;
  } else if (s == VarState::kAtUpper) {
    if (!std::isfinite(hi)) s = std::isfinite(lo) ? VarState::kAtLower : VarState::kAtZero;
  } else if (s == VarState::kAtZero) {
    if (std::isfinite(lo)) {
      s = VarState::kAtLower;
    } else if (std::isfinite(hi)) {
      s = VarState::kAtUpper;
    }
  } else {
    if (std::isfinite(lo)) {
      s = VarState::kAtLower;
    } else {
      s = std::isfinite(hi) ? VarState::kAtUpper : VarState::kAtZero;
    }
  }
  state_[j] = s;
  switch (s) {
    case VarState::kFixed:
    case VarState::kAtLower: x_[j] = lo; break;
    case VarState::kAtUpper: x_[j] = hi; break;
    default: x_[j] = 0.0; break;
  }
}

void LpEngine::set_col_bounds(int j, double lower, double upper) {
  if (j < 0 || j >= n_) throw std::out_of_range("column index out of range");
  if (lower > upper) throw std::invalid_argument("lower bound above upper bound");
  lo_[j] = lower / col_scale_[j];
  hi_[j] = upper / col_scale_[j];
  if (state_[j] != VarState::kBasic) {
    if (state_[j] == VarState::kFixed) state_[j] = VarState::kAtLower;
    place_nonbasic(j);
    dirty_ = true;
  }
}

// Relaxes every bound that is not holding a nonbasic column in place by a
// small deterministic amount, so ties in the ratio test stop repeating.
void LpEngine::perturb() {
  saved_lo_ = lo_;
  saved_hi_ = hi_;
  for (int j = 0; j < n_ + m_; ++j) {
    const VarState s = state_[j];
    if (s == VarState::kFixed) continue;
    const double u = 0.5 + 0.5 * static_cast<double>((static_cast<unsigned>(j) * 2654435761u) % 1024u) / 1024.0;
    const double rel = 1e-6 * u;
    if (std::isfinite(lo_[j]) && s != VarState::kAtLower) lo_[j] -= rel * (1.0 + std::fabs(lo_[j]));
    if (std::isfinite(hi_[j]) && s != VarState::kAtUpper) hi_[j] += rel * (1.0 + std::fabs(hi_[j]));
  }
  perturbed_ = true;
}

// Restores the true bounds and moves nonbasic columns onto them.
void LpEngine::unperturb() {
  lo_ = saved_lo_;
  hi_ = saved_hi_;
  for (int j = 0; j < n_ + m_; ++j) {
    if (state_[j] != VarState::kBasic) place_nonbasic(j);
  }
  perturbed_ = false;
  dirty_ = true;
}

double LpEngine::col_lower(int j) const { return lo_[j] * col_scale_[j]; }
double LpEngine::col_upper(int j) const { return hi_[j] * col_scale_[j]; }

void LpEngine::scatter_column(int j, std::vector<double>& out) const {
  std::fill(out.begin(), out.end(), 0.0);
  if (j < n_) {
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) out[row_index_[e]] = val_[e];
  } else {
    out[j - n_] = -1.0;
  }
}

void LpEngine::refactor() {
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<SparseColumn> cols(m_);
    for (int k = 0; k < m_; ++k) {
      const int j = head_[k];
      if (j < n_) {
        for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
          cols[k].rows.push_back(row_index_[e]);
          cols[k].vals.push_back(val_[e]);
        }
      } else {
        cols[k].rows.push_back(j - n_);
        cols[k].vals.push_back(-1.0);
      }
    }
    const SparseLu::Report rep = lu_.factor(m_, cols);
    if (rep.ok()) break;
    // Swap the unpivoted columns for slacks of the unpivoted rows.
    for (int k : rep.singular_positions) {
      const int j = head_[k];
      posn_[j] = -1;
      state_[j] = VarState::kAtLower;
      place_nonbasic(j);
    }
    for (size_t t = 0; t < rep.singular_positions.size(); ++t) {
      const int k = rep.singular_positions[t];
      const int j = n_ + rep.free_rows[t];
      head_[k] = j;
      posn_[j] = k;
      state_[j] = VarState::kBasic;
    }
    if (attempt == 3) throw std::runtime_error("basis repair failed");
  }
  std::vector<double> rhs(m_, 0.0);
  for (int j = 0; j < n_ + m_; ++j) {
    if (state_[j] == VarState::kBasic || x_[j] == 0.0) continue;
    if (j < n_) {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) rhs[row_index_[e]] -= val_[e] * x_[j];
    } else {
      rhs[j - n_] += x_[j];
    }
  }
  lu_.ftran(rhs);
  xb_ = rhs;
  dirty_ = false;
  fresh_ = true;
}

LpStatus LpEngine::solve(long budget) {
  const simd::KernelTable& K = simd::active();
  const int m = m_;
  const int n = n_;
  const int total = n + m;
  const double inf = std::numeric_limits<double>::infinity();
  if (m == 0) {
    // No rows: each column sits at its cheapest bound.
    for (int j = 0; j < n; ++j) {
      if (cost_[j] > 0.0) {
        if (!std::isfinite(lo_[j])) return LpStatus::kUnbounded;
        x_[j] = lo_[j];
      } else if (cost_[j] < 0.0) {
        if (!std::isfinite(hi_[j])) return LpStatus::kUnbounded;
        x_[j] = hi_[j];
      }
    }
    return LpStatus::kOptimal;
  }
  if (dirty_) refactor();

  std::vector<double> y(m), up(total), down(total), alpha(m), w(m), lob(m), hib(m), cb(m),
      rho(m), row_alpha(total, 0.0);
  std::vector<int> row_touched;
  // Cost vector the reduced costs d_ were computed for: phase-1 signs per
  // variable, or the true costs (signalled by p1_nonzeros < 0). A changed
  // infeasibility set shows up as a mismatch and forces a recompute.
  std::vector<signed char> p1cost(total, 0);
  int p1_nonzeros = -1;
  bool have_duals = false;
  const long start = iterations_;
  int degenerate_run = 0;
  int stalls = 0;
  bool bland = false;
  bool may_perturb = true;
  // Every exit goes through here so the caller never sees perturbed bounds.
  auto leave = [&](LpStatus st) {
    if (perturbed_) {
      unperturb();
      refactor();
    }
    return st;
  };

  while (true) {
    if (iterations_ - start >= budget) return leave(LpStatus::kIterationLimit);
    if (lu_.num_updates() >= opt_.refactor_interval ||
        lu_.eta_nonzeros() > 4 * lu_.factor_nonzeros() + 10 * m) {
      refactor();
    }
    if (fresh_) have_duals = false;

    bool phase1 = false;
    int nonzeros = 0;
    bool same_costs = have_duals && p1_nonzeros >= 0;
    for (int k = 0; k < m; ++k) {
      const int j = head_[k];
      const double v = xb_[k];
      if (v < lo_[j] - ptol_) {
        phase1 = true;
        cb[k] = -1.0;
        lob[k] = -inf;
        hib[k] = lo_[j];
      } else if (v > hi_[j] + ptol_) {
        phase1 = true;
        cb[k] = 1.0;
        lob[k] = hi_[j];
        hib[k] = inf;
      } else {
        cb[k] = 0.0;
        lob[k] = lo_[j];
        hib[k] = hi_[j];
      }
      if (cb[k] != 0.0) ++nonzeros;
      if (same_costs && p1cost[j] != static_cast<signed char>(cb[k])) same_costs = false;
    }
    if (phase1) {
      if (!same_costs || nonzeros != p1_nonzeros) have_duals = false;
    } else {
      if (p1_nonzeros >= 0) have_duals = false;
      for (int k = 0; k < m; ++k) cb[k] = cost_[head_[k]];
    }

    if (!have_duals) {
      // Fresh reduced costs from y = B^-T c_B.
      const bool phase_changed = (p1_nonzeros >= 0) != phase1;
      if (phase_changed || weight_.size() != static_cast<size_t>(total)) {
        weight_.assign(total, 1.0);
      }
      y = cb;
      lu_.btran(y);
      for (int j = 0; j < total; ++j) {
        const VarState st = state_[j];
        if (st == VarState::kBasic || st == VarState::kFixed) {
          d_[j] = 0.0;
          continue;
        }
        double dj;
        if (j < n) {
          dj = phase1 ? 0.0 : cost_[j];
          for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) dj -= val_[e] * y[row_index_[e]];
        } else {
          dj = y[j - n];
        }
        d_[j] = dj;
      }
      std::fill(p1cost.begin(), p1cost.end(), 0);
      if (phase1) {
        for (int k = 0; k < m; ++k) p1cost[head_[k]] = static_cast<signed char>(cb[k]);
        p1_nonzeros = nonzeros;
      } else {
        p1_nonzeros = -1;
      }
      have_duals = true;
    }

    for (int j = 0; j < total; ++j) {
      const VarState st = state_[j];
      up[j] = (st == VarState::kAtLower || st == VarState::kAtZero) ? 1.0 : 0.0;
      down[j] = (st == VarState::kAtUpper || st == VarState::kAtZero) ? 1.0 : 0.0;
    }

    long q = -1;
    if (bland) {
      for (int j = 0; j < total; ++j) {
        if (std::fmax(up[j] * -d_[j], down[j] * d_[j]) > dtol_) {
          q = j;
          break;
        }
      }
    } else {
      q = K.price_weighted(d_.data(), up.data(), down.data(), weight_.data(),
                           static_cast<size_t>(total), dtol_)
              .index;
    }

    if (q < 0) {
      if (!fresh_) {
        refactor();
        continue;
      }
      if (perturbed_) {
        // Finish on the true bounds; usually a handful of pivots.
        unperturb();
        refactor();
        degenerate_run = 0;
        continue;
      }
      return phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal;
    }

    const double dir = d_[q] < 0.0 ? 1.0 : -1.0;
    scatter_column(static_cast<int>(q), alpha);
    lu_.ftran(alpha);
    for (int k = 0; k < m; ++k) w[k] = dir * alpha[k];

    const double theta1 = K.ratio_pass1(xb_.data(), lob.data(), hib.data(), w.data(),
                                        static_cast<size_t>(m), opt_.pivot_tol, ptol_);
    const double range = hi_[q] - lo_[q];
    if (std::isfinite(range) && range <= theta1) {
      // Bound flip: the basis and the reduced costs stay as they are.
      K.axpy(-range, w.data(), xb_.data(), static_cast<size_t>(m));
      if (state_[q] == VarState::kAtLower) {
        state_[q] = VarState::kAtUpper;
        x_[q] = hi_[q];
      } else {
        state_[q] = VarState::kAtLower;
        x_[q] = lo_[q];
      }
      ++iterations_;
      fresh_ = false;
      degenerate_run = 0;
      bland = false;
      continue;
    }
    if (!std::isfinite(theta1)) {
      if (!fresh_) {
        refactor();
        continue;
      }
      if (!phase1) return leave(LpStatus::kUnbounded);
      if (++stalls > 5) return leave(LpStatus::kIterationLimit);
      refactor();
      continue;
    }

    long p = -1;
    double theta = 0.0;
    if (bland) {
      // Smallest ratio; among near-ties the lowest variable index.
      double best = inf;
      for (int k = 0; k < m; ++k) {
        double r;
        if (w[k] > opt_.pivot_tol) {
          r = (xb_[k] - lob[k]) / w[k];
        } else if (w[k] < -opt_.pivot_tol) {
          r = (hib[k] - xb_[k]) / -w[k];
        } else {
          continue;
        }
        r = std::max(r, 0.0);
        if (p < 0 || r < best - 1e-12) {
          best = r;
          p = k;
          theta = r;
        } else if (r <= best + 1e-12 && head_[k] < head_[p]) {
          best = std::min(best, r);
          p = k;
          theta = r;
        }
      }
    } else {
      const simd::Candidate c =
          K.ratio_pass2(xb_.data(), lob.data(), hib.data(), w.data(),
                        static_cast<size_t>(m), opt_.pivot_tol, theta1);
      p = c.index;
      theta = c.score;
    }
    if (p < 0) {
      if (++stalls > 5) return leave(LpStatus::kIterationLimit);
      refactor();
      continue;
    }

    // Pivot row of B^-1 N from rho = B^-T e_p, taken before the update.
    std::fill(rho.begin(), rho.end(), 0.0);
    rho[p] = 1.0;
    lu_.btran(rho);
    for (int j : row_touched) row_alpha[j] = 0.0;
    row_touched.clear();
    for (int i = 0; i < m; ++i) {
      const double r = rho[i];
      if (std::fabs(r) <= 1e-13) continue;
      for (int e = row_start_[i]; e < row_start_[i + 1]; ++e) {
        const int j = row_col_[e];
        if (row_alpha[j] == 0.0) row_touched.push_back(j);
        row_alpha[j] += r * row_val_[e];
        if (row_alpha[j] == 0.0) row_alpha[j] = 1e-300;  // keep it listed
      }
      row_touched.push_back(n + i);
      row_alpha[n + i] = -r;
    }
    const double pivot = alpha[p];
    const double theta_d = d_[q] / pivot;
    const double wq = weight_[q];
    const int leaving = head_[p];
    for (int j : row_touched) {
      const VarState st = state_[j];
      if (st == VarState::kBasic || st == VarState::kFixed) continue;
      const double a = row_alpha[j];
      d_[j] -= theta_d * a;
      const double ratio = a / pivot;
      weight_[j] = std::max(weight_[j], ratio * ratio * wq);
    }

    K.axpy(-theta, w.data(), xb_.data(), static_cast<size_t>(m));
    const double xq = x_[q] + dir * theta;
    const double bound = w[p] > 0.0 ? lob[p] : hib[p];
    x_[leaving] = bound;
    if (lo_[leaving] == hi_[leaving]) {
      state_[leaving] = VarState::kFixed;
      d_[leaving] = 0.0;
    } else {
      state_[leaving] = bound == lo_[leaving] ? VarState::kAtLower : VarState::kAtUpper;
      d_[leaving] = -theta_d;
    }
    weight_[leaving] = std::max(wq / (pivot * pivot), 1.0);
    posn_[leaving] = -1;
    head_[p] = static_cast<int>(q);
    posn_[q] = static_cast<int>(p);
    state_[q] = VarState::kBasic;
    d_[q] = 0.0;
    xb_[p] = xq;
    lu_.update(static_cast<int>(p), alpha);
    ++iterations_;
    fresh_ = false;
    stalls = 0;
    if (theta <= 1e-12) {
      if (++degenerate_run > opt_.bland_after) {
        if (may_perturb && !perturbed_) {
          perturb();
          may_perturb = false;
          degenerate_run = 0;
        } else if (degenerate_run > 10 * opt_.bland_after) {
          bland = true;
        }
      }
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

double LpEngine::objective() const {
  double obj = offset_;
  const std::vector<double> x = primal();
  for (int j = 0; j < n_; ++j) obj += cost_[j] / cost_scale_ / col_scale_[j] * x[j];
  return obj;
}

std::vector<double> LpEngine::primal() const {
  std::vector<double> x(n_);
  for (int j = 0; j < n_; ++j) {
    const double v = state_[j] == VarState::kBasic ? xb_[posn_[j]] : x_[j];
    x[j] = v * col_scale_[j];
  }
  return x;
}

Basis LpEngine::basis() const { return Basis{head_, state_}; }

void LpEngine::set_basis(const Basis& b) {
  if (static_cast<int>(b.head.size()) != m_ ||
      static_cast<int>(b.state.size()) != n_ + m_) {
    throw std::invalid_argument("basis dimension mismatch");
  }
  head_ = b.head;
  state_ = b.state;
  std::fill(posn_.begin(), posn_.end(), -1);
  for (int k = 0; k < m_; ++k) posn_[head_[k]] = k;
  for (int j = 0; j < n_ + m_; ++j) {
    if (state_[j] != VarState::kBasic) place_nonbasic(j);
  }
  dirty_ = true;
}

namespace {

SolveStatus map_status(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return SolveStatus::kOptimal;
    case LpStatus::kInfeasible: return SolveStatus::kInfeasible;
    case LpStatus::kUnbounded: return SolveStatus::kUnbounded;
    case LpStatus::kIterationLimit: return SolveStatus::kIterationLimit;
  }
  return SolveStatus::kInfeasible;
}

}  // namespace

Solution solve_lp(const MilpInstance& instance, const SolverOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  Solution sol;
  sol.stats.kernels = std::string(simd::to_string(simd::active().isa));
  const LpModel model = LpModel::from_instance(instance);
  if (model.trivially_infeasible) {
    sol.status = SolveStatus::kInfeasible;
    return sol;
  }
  LpEngine engine(model, options);
  const LpStatus st = engine.solve();
  sol.status = map_status(st);
  sol.stats.iterations = engine.iterations();
  if (st == LpStatus::kOptimal) {
    std::vector<double> x = engine.primal();
    std::vector<std::string> keys;
    keys.reserve(x.size());
    for (const Variable& v : instance.vars.all()) keys.push_back(v.key);
    sol.objective = instance.objective_value(x);
    sol.assign(std::move(keys), std::move(x));
    sol.stats.best_bound = sol.objective;
  }
  sol.stats.nodes = 0;
  sol.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace hsc
