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

// Programmatic cases for builder, audit and acceptance tests.

#ifndef HSC_TESTS_TOY_CASES_HPP_
#define HSC_TESTS_TOY_CASES_HPP_

#include <cstdint>

#include "hsc/io/case_io.hpp"

namespace hsc::testing {
/// Reference technology catalog in $ units; pipeline max_flow is a
/// default of 4 t/h per line with no literature source.
/// default of 4 t/h per line.
TechnologyCatalog reference_catalog();

/// One zone, one uniform period; SMR only, flat demand.
CaseBundle one_zone_smr(int steps, double demand, double gas_price);

/// One zone with no technologies and zero demand.
CaseBundle zero_case(int steps);

struct TruckCaseOptions {
  int steps = 24;
  int delay = 2;
  double distance = 100.0;
  double demand_a = 0.0;
  double demand_b = 3.0;
  bool storage = false;
  bool gas_trucks_only = true;
  TruckMode mode = TruckMode::kRelaxed;
};

/// Two zones: SMR allowed only in zone A, demand at B served by trucks or
/// a local electrolyzer (optionally also stationary storage).
CaseBundle two_zone_trucks(const TruckCaseOptions& options);

/// Randomized small truck network (2 or 3 zones, short periods, random
/// delays, demand and prices) for the property suite.
CaseBundle random_truck_case(std::uint64_t seed, TruckMode mode);

}  // namespace hsc::testing

#endif  // HSC_TESTS_TOY_CASES_HPP_
