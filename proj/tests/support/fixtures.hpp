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

// Small solver fixtures shared by the unit tests and the acceptance run.

#ifndef HSC_TESTS_FIXTURES_HPP_
#define HSC_TESTS_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hsc/lp/instance.hpp"

namespace hsc::testing {

struct Fixture {
  std::string name;
  MilpInstance instance;
  // Hand-derived optimum when known (value of the objective, point).
  std::optional<double> objective;
  std::vector<double> point;
};

/// Hand-solved LPs with unique vertex optima.
std::vector<Fixture> hand_lps();
/// Seeded random LPs with finite column bounds.
std::vector<Fixture> random_lps(int count, unsigned seed);
/// Hand MILPs plus seeded random MILPs with at most 6 integer columns.
std::vector<Fixture> milp_fixtures(int random_count, unsigned seed);
/// Everything above, used for the MPS round-trip.
std::vector<Fixture> all_fixtures();

}  // namespace hsc::testing

#endif  // HSC_TESTS_FIXTURES_HPP_
