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

// Fixed-format MPS export and import.
//
// Names in the file are at most 8 characters: 'X' or 'R' followed by a
// base-36 FNV-1a hash of the semantic key, with deterministic probing on
// collision. The objective row is COST and its RHS holds the negated
// objective offset. A sidecar JSON name map restores the semantic keys.
// Numeric fields use the shortest decimal that round-trips exactly, so a
// field may run past the classic 12-character width; the reader splits on
// whitespace, which is unambiguous because generated names hold no blanks.

#ifndef HSC_SOLVER_MPS_HPP_
#define HSC_SOLVER_MPS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsc/lp/instance.hpp"

namespace hsc {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(long line, const std::string& what)
      : std::runtime_error("MPS line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

struct MpsNameMap {
  std::vector<std::string> column_names;  // short names, instance order
  std::vector<std::string> column_keys;
  std::vector<std::string> row_names;
  std::vector<std::string> row_keys;

  std::string to_json() const;
  static MpsNameMap from_json(const std::string& text);
};

/// Short names for every row and column of the instance.
MpsNameMap make_name_map(const MilpInstance& instance);

/// Writes the instance; returns the name map used.
MpsNameMap write_mps(const MilpInstance& instance, std::ostream& out);

/// Parses fixed-format MPS. With a name map, short names are replaced by
/// the semantic keys. Throws MpsParseError.
MilpInstance read_mps(std::istream& in, const MpsNameMap* names = nullptr);

}  // namespace hsc

#endif  // HSC_SOLVER_MPS_HPP_
