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

// Solver result records and the solution CSV exchange format
// ("variable-key,value" header, one row per variable, registry order).

#ifndef HSC_SOLVER_SOLUTION_HPP_
#define HSC_SOLVER_SOLUTION_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hsc {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kNodeLimit };

std::string_view to_string(SolveStatus status);
SolveStatus solve_status_from_string(std::string_view s);

struct SolverStats {
  long iterations = 0;
  long nodes = 0;
  double wall_seconds = 0.0;
  double best_bound = 0.0;  // MILP: global lower bound at exit
  double gap = 0.0;         // MILP: relative gap of the incumbent
  std::string kernels;      // SIMD variant used
};

class MissingVariableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Solution {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective = 0.0;
  SolverStats stats;

  // Replaces all values; keys and values are aligned.
  void assign(std::vector<std::string> keys, std::vector<double> values);
  bool has_values() const { return !keys_.empty(); }
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<double>& values() const { return values_; }
  std::optional<double> find(std::string_view key) const;
  // Throws MissingVariableError.
  double value(std::string_view key) const;
  // Overwrites one existing entry. Throws MissingVariableError.
  void set(std::string_view key, double v);

 private:
  std::vector<std::string> keys_;
  std::vector<double> values_;
  std::unordered_map<std::string, size_t> index_;
};

class SolutionFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_solution_csv(const Solution& solution, std::ostream& out);
// Status is set to optimal; objective is left 0 for the caller to fill.
Solution read_solution_csv(std::istream& in);

}  // namespace hsc

#endif  // HSC_SOLVER_SOLUTION_HPP_
