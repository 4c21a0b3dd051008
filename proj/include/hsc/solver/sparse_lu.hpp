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

// Sparse LU factorization of a simplex basis with product-form updates.
//
// factor() eliminates with Markowitz pivot selection and threshold partial
// pivoting. Row and column counts are kept in bucket lists, so singletons
// are taken first and the search only inspects a few candidates per step.
// Basis columns that cannot be pivoted are reported with the rows left
// over, letting the caller swap in slack columns and factor again.

#ifndef HSC_SOLVER_SPARSE_LU_HPP_
#define HSC_SOLVER_SPARSE_LU_HPP_

#include <utility>
#include <vector>

namespace hsc {

struct SparseColumn {
  std::vector<int> rows;
  std::vector<double> vals;
};

class SparseLu {
 public:
  struct Options {
    double threshold = 0.1;     // relative pivot threshold
    double abs_pivot_tol = 1e-11;
    int search_limit = 4;       // candidates inspected once a pivot is known
  };

  struct Report {
    std::vector<int> singular_positions;  // basis positions left unpivoted
    std::vector<int> free_rows;           // rows left unpivoted
    bool ok() const { return singular_positions.empty(); }
  };

  Report factor(int dim, const std::vector<SparseColumn>& columns,
                const Options& options);
  Report factor(int dim, const std::vector<SparseColumn>& columns) {
    return factor(dim, columns, Options{});
  }

  // Solves B x = b. rhs is indexed by row on entry and by basis position
  // on exit.
  void ftran(std::vector<double>& rhs) const;
  // Solves B^T y = c. rhs is indexed by basis position on entry and by row
  // on exit.
  void btran(std::vector<double>& rhs) const;

  // Replaces the column at basis position p. alpha = ftran(new column).
  void update(int p, const std::vector<double>& alpha);

  int dim() const { return dim_; }
  int num_updates() const { return static_cast<int>(eta_pos_.size()); }
  long factor_nonzeros() const {
    return static_cast<long>(l_val_.size() + u_val_.size()) + dim_;
  }
  long eta_nonzeros() const { return static_cast<long>(eta_val_.size()); }

 private:
  void transpose_factors();

  int dim_ = 0;
  // Pivot sequence.
  std::vector<int> piv_row_, piv_col_;
  std::vector<double> diag_;
  // L column per step: rows and multipliers.
  std::vector<int> l_start_, l_idx_;
  std::vector<double> l_val_;
  // U row per step (excluding the diagonal): basis positions and values.
  std::vector<int> u_start_, u_idx_;
  std::vector<double> u_val_;
  // Transposed copies for the scatter-form solves: per row, the L entries
  // lying in it; per basis position, the U entries referencing it. Targets
  // are stored as pivot rows.
  std::vector<int> lt_start_, lt_target_, ut_start_, ut_target_;
  std::vector<double> lt_val_, ut_val_;
  // Product-form etas.
  std::vector<int> eta_pos_, eta_start_, eta_idx_;
  std::vector<double> eta_piv_, eta_val_;
  mutable std::vector<double> work_;
};

}  // namespace hsc

#endif  // HSC_SOLVER_SPARSE_LU_HPP_
