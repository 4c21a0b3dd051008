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

// Builds the least-cost supply-chain MILP from domain data.
//
// build() declares every decision variable with its objective coefficient
// (capital terms carry an annuity factor, operating terms carry Omega_t),
// then runs the emit_* passes, each of which appends one constraint family.
// The passes are exposed so tests can check them one family at a time.
//
// Representative periods are closed cyclically: storage inventory, truck
// states and unit commitment wrap from the last step of a period to its
// first; linepack starts and ends each period at zero. Window sums (minimum
// up/down time, truck delay) are truncated at period boundaries.

#ifndef HSC_LP_BUILDER_HPP_
#define HSC_LP_BUILDER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "hsc/core/model.hpp"
#include "hsc/lp/instance.hpp"

namespace hsc {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How the fixed-route baseline turns a route fleet into a per-step
/// capacity. kRoundTrip: each load ties a truck up for 2*delay+2 steps and
/// arrives delay+1 steps after dispatch, which is exactly what a flexible
/// truck needs, so the baseline is a restriction of the flexible model.
/// kOneWay: cargo/max(1,delay) per truck-step with instantaneous delivery.
enum class ExistingFleetConvention { kRoundTrip, kOneWay };

struct BuildOptions {
  ExistingFleetConvention existing_convention = ExistingFleetConvention::kRoundTrip;
  // Route fleets and loads integer in the fixed-route baseline.
  bool existing_integer_fleets = false;
  // Investment caps are this multiple of the peak system demand.
  double cap_multiplier = 2.0;
};

std::string describe(const BuildOptions& options);

/// Column indices of the variables owned by one generation tech in a zone.
struct GenSlot {
  int tech = 0;
  int zone = 0;
  int units = -1;
  std::vector<int> output, online, startup, shutdown, gas;
};

struct StorageSlot {
  int tech = 0;
  int zone = 0;
  int capacity = -1;
  int rate = -1;
  std::vector<int> charge, discharge, level;
};

/// One physical line type between an unordered zone pair. End 0 is the
/// exchange at zone_a (path a->b), end 1 the exchange at zone_b.
struct PipeSlot {
  int type = 0;
  int zone_a = 0;
  int zone_b = 0;
  int path_ab = -1;
  int path_ba = -1;
  double distance = 0.0;
  int lines = -1;
  std::vector<int> linepack;
  std::vector<int> in[2], out[2];
};

struct TruckSlot {
  int type = 0;
  int fleet = -1;
  std::vector<int> full, empty;                       // [t]
  std::vector<std::vector<int>> parked_full, parked_empty, charged,
      discharged;                                     // [z][t]
  std::vector<std::vector<int>> transit_full, transit_empty, depart_full,
      depart_empty, arrive_full, arrive_empty;        // [p][t]
  std::vector<int> station;                           // [z]
};

struct RouteSlot {
  int type = 0;
  int path = 0;
  int fleet = -1;
  int cycle_steps = 1;
  int lag_steps = 0;
  std::vector<int> loads;  // [t]
};

/// Shared state of one build: inputs, the instance under construction and
/// the column maps of every declared variable.
class BuildContext {
 public:
  BuildContext(const Network& network, const TechnologyCatalog& catalog,
               const TimeGrid& grid, const Scenario& scenario,
               BuildOptions options = {});

  const Network& network;
  const TechnologyCatalog& catalog;
  const TimeGrid& grid;
  const Scenario& scenario;
  const BuildOptions options;

  MilpInstance instance;

  std::vector<GenSlot> gen;
  std::vector<StorageSlot> storage;
  std::vector<PipeSlot> pipes;
  std::vector<TruckSlot> trucks;
  std::vector<RouteSlot> routes;
  std::vector<std::vector<int>> transport, lost, comp_power;  // [z][t]
  std::vector<std::vector<int>> station;  // [j][z], shared by both truck modes

  int zones() const { return static_cast<int>(network.zones.size()); }
  int steps() const { return grid.size(); }
  bool flexible_trucks() const;
  // Rate-term weight Omega_t * dt.
  double rate_weight(int t) const { return grid.weight(t) * grid.step_hours(); }
  // Index of path from->to, or -1.
  int path_index(int from, int to) const;
  int path_from(int p) const { return path_from_[static_cast<size_t>(p)]; }
  int path_to(int p) const { return path_to_[static_cast<size_t>(p)]; }
  // Step at which a load dispatched at t arrives, cyclic within its period.
  int lagged_step(int t, int lag) const;

 private:
  void declare_variables();
  std::vector<int> path_from_, path_to_;
};

// Each pass appends its family and returns the number of rows it added.
int emit_balance(BuildContext& ctx);
int emit_production(BuildContext& ctx);
int emit_storage(BuildContext& ctx);
int emit_pipeline(BuildContext& ctx);
int emit_trucks(BuildContext& ctx);
int emit_transmission_balance(BuildContext& ctx);
int emit_compression_power(BuildContext& ctx);
int emit_existing_mode(BuildContext& ctx);

/// Full build. Throws BuildError on invalid input (diagnostics from
/// validate_case) or when a travel delay exceeds its period length.
MilpInstance build(const Network& network, const TechnologyCatalog& catalog,
                   const TimeGrid& grid, const Scenario& scenario,
                   const BuildOptions& options = {});

}  // namespace hsc

#endif  // HSC_LP_BUILDER_HPP_
