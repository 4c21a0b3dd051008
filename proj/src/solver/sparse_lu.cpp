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

#include "hsc/solver/sparse_lu.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hsc {
namespace {

// Doubly linked lists of items keyed by a small integer count.
class Buckets {
 public:
  void init(int items, int max_key) {
    head_.assign(static_cast<size_t>(max_key) + 2, -1);
    next_.assign(items, -1);
    prev_.assign(items, -1);
    key_.assign(items, -1);
  }
  void insert(int x, int k) {
    key_[x] = k;
    prev_[x] = -1;
    next_[x] = head_[k];
    if (head_[k] >= 0) prev_[head_[k]] = x;
    head_[k] = x;
  }
  void remove(int x) {
    if (key_[x] < 0) return;
    if (prev_[x] >= 0) {
      next_[prev_[x]] = next_[x];
    } else {
      head_[key_[x]] = next_[x];
    }
    if (next_[x] >= 0) prev_[next_[x]] = prev_[x];
    key_[x] = -1;
  }
  void move(int x, int k) {
    remove(x);
    insert(x, k);
  }
  int head(int k) const { return head_[k]; }
  int next(int x) const { return next_[x]; }

 private:
  std::vector<int> head_, next_, prev_, key_;
};

}  // namespace

SparseLu::Report SparseLu::factor(int dim, const std::vector<SparseColumn>& columns,
                                  const Options& opt) {
  if (static_cast<int>(columns.size()) != dim) {
    throw std::invalid_argument("basis column count does not match dimension");
  }
  const int m = dim;
  dim_ = m;
  piv_row_.clear();
  piv_col_.clear();
  diag_.clear();
  l_start_.assign(1, 0);
  l_idx_.clear();
  l_val_.clear();
  u_start_.assign(1, 0);
  u_idx_.clear();
  u_val_.clear();
  eta_pos_.clear();
  eta_start_.assign(1, 0);
  eta_idx_.clear();
  eta_piv_.clear();
  eta_val_.clear();
  work_.assign(m, 0.0);

  std::vector<std::vector<int>> crow(m), rcol(m);
  std::vector<std::vector<double>> cval(m);
  for (int j = 0; j < m; ++j) {
    const SparseColumn& c = columns[j];
    for (size_t e = 0; e < c.rows.size(); ++e) {
      if (c.vals[e] == 0.0) continue;
      const int r = c.rows[e];
      if (r < 0 || r >= m) throw std::out_of_range("basis column row out of range");
      crow[j].push_back(r);
      cval[j].push_back(c.vals[e]);
      rcol[r].push_back(j);
    }
  }

  Buckets colb, rowb;
  colb.init(m, m);
  rowb.init(m, m);
  for (int j = 0; j < m; ++j) colb.insert(j, static_cast<int>(crow[j].size()));
  for (int i = 0; i < m; ++i) rowb.insert(i, static_cast<int>(rcol[i].size()));
  std::vector<double> cmax(m, 0.0);
  std::vector<char> cmax_ok(m, 0), row_done(m, 0), col_done(m, 0);
  std::vector<int> pos(m, -1);

  auto col_max = [&](int j) {
    if (!cmax_ok[j]) {
      double mx = 0.0;
      for (double v : cval[j]) mx = std::fmax(mx, std::fabs(v));
      cmax[j] = mx;
      cmax_ok[j] = 1;
    }
    return cmax[j];
  };
  auto find_in_col = [&](int j, int i) {
    const auto& rows = crow[j];
    for (size_t e = 0; e < rows.size(); ++e) {
      if (rows[e] == i) return static_cast<int>(e);
    }
    return -1;
  };

  std::vector<std::pair<int, double>> lcol;
  std::vector<std::pair<int, double>> urow;

  for (int step = 0; step < m; ++step) {
    int bi = -1, bj = -1;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    double best_abs = 0.0;
    int searched = 0;
    auto consider = [&](int i, int j, double a, std::int64_t cost) {
      if (cost < best_cost || (cost == best_cost && a > best_abs)) {
        best_cost = cost;
        best_abs = a;
        bi = i;
        bj = j;
      }
    };
    for (int k = 1; k <= m; ++k) {
      bool stop = false;
      for (int j = colb.head(k); j >= 0; j = colb.next(j)) {
        const double cm = col_max(j);
        if (cm <= opt.abs_pivot_tol) continue;
        for (size_t e = 0; e < crow[j].size(); ++e) {
          const double a = std::fabs(cval[j][e]);
          if (a < opt.threshold * cm || a <= opt.abs_pivot_tol) continue;
          const int i = crow[j][e];
          consider(i, j, a,
                   static_cast<std::int64_t>(rcol[i].size() - 1) * (k - 1));
        }
        ++searched;
        if (bi >= 0 && (best_cost <= static_cast<std::int64_t>(k - 1) * (k - 1) ||
                        searched >= opt.search_limit)) {
          stop = true;
          break;
        }
      }
      if (stop) break;
      for (int i = rowb.head(k); i >= 0; i = rowb.next(i)) {
        for (int j : rcol[i]) {
          const int e = find_in_col(j, i);
          const double a = std::fabs(cval[j][e]);
          const double cm = col_max(j);
          if (a < opt.threshold * cm || a <= opt.abs_pivot_tol) continue;
          consider(i, j, a,
                   static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(crow[j].size() - 1));
        }
        ++searched;
        if (bi >= 0 && (best_cost <= static_cast<std::int64_t>(k - 1) * k ||
                        searched >= opt.search_limit)) {
          stop = true;
          break;
        }
      }
      if (stop) break;
    }
    if (bi < 0) break;

    const int p = bi;
    const int q = bj;
    const double v = cval[q][find_in_col(q, p)];
    piv_row_.push_back(p);
    piv_col_.push_back(q);
    diag_.push_back(v);

    // L multipliers from the pivot column.
    lcol.clear();
    for (size_t e = 0; e < crow[q].size(); ++e) {
      const int i = crow[q][e];
      if (i == p) continue;
      lcol.emplace_back(i, cval[q][e] / v);
      auto& rc = rcol[i];
      for (size_t t = 0; t < rc.size(); ++t) {
        if (rc[t] == q) {
          rc[t] = rc.back();
          rc.pop_back();
          break;
        }
      }
    }
    colb.remove(q);
    col_done[q] = 1;
    crow[q].clear();
    cval[q].clear();
    rowb.remove(p);
    row_done[p] = 1;

    // U row and Schur complement update.
    urow.clear();
    for (int j : rcol[p]) {
      if (j == q) continue;
      const int e = find_in_col(j, p);
      const double apj = cval[j][e];
      crow[j][e] = crow[j].back();
      crow[j].pop_back();
      cval[j][e] = cval[j].back();
      cval[j].pop_back();
      urow.emplace_back(j, apj);
      if (!lcol.empty()) {
        for (size_t t = 0; t < crow[j].size(); ++t) pos[crow[j][t]] = static_cast<int>(t);
        for (const auto& [i, l] : lcol) {
          const int at = pos[i];
          if (at >= 0) {
            cval[j][at] -= l * apj;
          } else {
            crow[j].push_back(i);
            cval[j].push_back(-l * apj);
            rcol[i].push_back(j);
          }
        }
        for (int r : crow[j]) pos[r] = -1;
      }
      cmax_ok[j] = 0;
      colb.move(j, static_cast<int>(crow[j].size()));
    }
    rcol[p].clear();
    for (const auto& [i, l] : lcol) rowb.move(i, static_cast<int>(rcol[i].size()));

    for (const auto& [i, l] : lcol) {
      l_idx_.push_back(i);
      l_val_.push_back(l);
    }
    l_start_.push_back(static_cast<int>(l_idx_.size()));
    for (const auto& [j, u] : urow) {
      u_idx_.push_back(j);
      u_val_.push_back(u);
    }
    u_start_.push_back(static_cast<int>(u_idx_.size()));
  }
  transpose_factors();

  Report report;
  if (static_cast<int>(piv_row_.size()) < m) {
    for (int j = 0; j < m; ++j) {
      if (!col_done[j]) report.singular_positions.push_back(j);
    }
    for (int i = 0; i < m; ++i) {
      if (!row_done[i]) report.free_rows.push_back(i);
    }
  }
  return report;
}

void SparseLu::transpose_factors() {
  const int np = static_cast<int>(piv_row_.size());
  auto build = [&](const std::vector<int>& start, const std::vector<int>& idx,
                   const std::vector<double>& val, std::vector<int>& t_start,
                   std::vector<int>& t_target, std::vector<double>& t_val) {
    t_start.assign(static_cast<size_t>(dim_) + 1, 0);
    for (int i : idx) ++t_start[static_cast<size_t>(i) + 1];
    for (int i = 0; i < dim_; ++i) t_start[i + 1] += t_start[i];
    t_target.resize(idx.size());
    t_val.resize(idx.size());
    std::vector<int> fill(t_start.begin(), t_start.end() - 1);
    for (int k = 0; k < np; ++k) {
      for (int e = start[k]; e < start[k + 1]; ++e) {
        const int slot = fill[idx[e]]++;
        t_target[slot] = piv_row_[k];
        t_val[slot] = val[e];
      }
    }
  };
  build(l_start_, l_idx_, l_val_, lt_start_, lt_target_, lt_val_);
  build(u_start_, u_idx_, u_val_, ut_start_, ut_target_, ut_val_);
}

void SparseLu::ftran(std::vector<double>& rhs) const {
  const int np = static_cast<int>(piv_row_.size());
  for (int k = 0; k < np; ++k) {
    const double v = rhs[piv_row_[k]];
    if (v == 0.0) continue;
    for (int e = l_start_[k]; e < l_start_[k + 1]; ++e) rhs[l_idx_[e]] -= l_val_[e] * v;
  }
  for (int k = np - 1; k >= 0; --k) {
    const int c = piv_col_[k];
    const double x = rhs[piv_row_[k]] / diag_[k];
    work_[c] = x;
    if (x == 0.0) continue;
    for (int e = ut_start_[c]; e < ut_start_[c + 1]; ++e) rhs[ut_target_[e]] -= ut_val_[e] * x;
  }
  rhs.swap(work_);
  const int ne = static_cast<int>(eta_pos_.size());
  for (int k = 0; k < ne; ++k) {
    const int p = eta_pos_[k];
    const double xp = rhs[p];
    if (xp == 0.0) continue;
    rhs[p] = xp * eta_piv_[k];
    for (int e = eta_start_[k]; e < eta_start_[k + 1]; ++e) rhs[eta_idx_[e]] += eta_val_[e] * xp;
  }
}

void SparseLu::btran(std::vector<double>& rhs) const {
  for (int k = static_cast<int>(eta_pos_.size()) - 1; k >= 0; --k) {
    const int p = eta_pos_[k];
    double s = eta_piv_[k] * rhs[p];
    for (int e = eta_start_[k]; e < eta_start_[k + 1]; ++e) s += eta_val_[e] * rhs[eta_idx_[e]];
    rhs[p] = s;
  }
  const int np = static_cast<int>(piv_row_.size());
  for (int k = 0; k < np; ++k) {
    const double w = rhs[piv_col_[k]] / diag_[k];
    work_[piv_row_[k]] = w;
    if (w == 0.0) continue;
    for (int e = u_start_[k]; e < u_start_[k + 1]; ++e) rhs[u_idx_[e]] -= u_val_[e] * w;
  }
  for (int k = np - 1; k >= 0; --k) {
    const int i = piv_row_[k];
    const double w = work_[i];
    if (w == 0.0) continue;
    for (int e = lt_start_[i]; e < lt_start_[i + 1]; ++e) work_[lt_target_[e]] -= lt_val_[e] * w;
  }
  rhs.swap(work_);
}

void SparseLu::update(int p, const std::vector<double>& alpha) {
  const double ap = alpha[p];
  if (ap == 0.0) throw std::runtime_error("zero pivot in basis update");
  eta_pos_.push_back(p);
  eta_piv_.push_back(1.0 / ap);
  for (int i = 0; i < dim_; ++i) {
    if (i == p || alpha[i] == 0.0) continue;
    if (std::fabs(alpha[i]) < 1e-14) continue;
    eta_idx_.push_back(i);
    eta_val_.push_back(-alpha[i] / ap);
  }
  eta_start_.push_back(static_cast<int>(eta_idx_.size()));
}

}  // namespace hsc
