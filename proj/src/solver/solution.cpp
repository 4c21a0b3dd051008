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

#include "hsc/solver/solution.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace hsc {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kIterationLimit: return "iteration-limit";
    case SolveStatus::kNodeLimit: return "node-limit";
  }
  return "infeasible";
}

SolveStatus solve_status_from_string(std::string_view s) {
  for (SolveStatus st : {SolveStatus::kOptimal, SolveStatus::kInfeasible,
                         SolveStatus::kUnbounded, SolveStatus::kIterationLimit,
                         SolveStatus::kNodeLimit}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown solve status: " + std::string(s));
}

void Solution::assign(std::vector<std::string> keys, std::vector<double> values) {
  if (keys.size() != values.size()) {
    throw std::invalid_argument("solution keys and values differ in length");
  }
  keys_ = std::move(keys);
  values_ = std::move(values);
  index_.clear();
  index_.reserve(keys_.size());
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (!index_.emplace(keys_[i], i).second) {
      throw std::invalid_argument("duplicate solution key " + keys_[i]);
    }
  }
}

std::optional<double> Solution::find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) return std::nullopt;
  return values_[it->second];
}

double Solution::value(std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) {
    throw MissingVariableError("solution has no value for " + std::string(key));
  }
  return values_[it->second];
}

void Solution::set(std::string_view key, double v) {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) {
    throw MissingVariableError("solution has no value for " + std::string(key));
  }
  values_[it->second] = v;
}

void write_solution_csv(const Solution& solution, std::ostream& out) {
  out << "variable-key,value\n";
  char buf[64];
  for (size_t i = 0; i < solution.keys().size(); ++i) {
    auto res = std::to_chars(buf, buf + sizeof buf, solution.values()[i]);
    out << solution.keys()[i] << ',' << std::string_view(buf, res.ptr - buf) << '\n';
  }
}

Solution read_solution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SolutionFormatError("solution file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "variable-key,value") {
    throw SolutionFormatError("line 1: expected header 'variable-key,value'");
  }
  std::vector<std::string> keys;
  std::vector<double> values;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0) {
      throw SolutionFormatError("line " + std::to_string(lineno) + ": expected key,value");
    }
    double v = 0.0;
    const char* first = line.data() + comma + 1;
    const char* last = line.data() + line.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
      throw SolutionFormatError("line " + std::to_string(lineno) + ": bad number");
    }
    keys.push_back(line.substr(0, comma));
    values.push_back(v);
  }
  Solution s;
  s.status = SolveStatus::kOptimal;
  try {
    s.assign(std::move(keys), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw SolutionFormatError(e.what());
  }
  return s;
}

}  // namespace hsc
