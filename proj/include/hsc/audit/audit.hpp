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

// Independent solution auditor. Every constraint family is re-evaluated
// from the domain records and the solution values looked up by semantic
// key; nothing is read from a built matrix. Costs are recomputed the same
// way, term by term.

#ifndef HSC_AUDIT_AUDIT_HPP_
#define HSC_AUDIT_AUDIT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsc/core/model.hpp"
#include "hsc/lp/builder.hpp"
#include "hsc/solver/solution.hpp"

namespace hsc {

inline constexpr double kAuditTolerance = 1e-6;

/// Annualized cost terms, $/year.
struct CostBreakdown {
  double production = 0.0;   // generation unit capex
  double storage = 0.0;      // storage vessel capex
  double pipeline = 0.0;     // pipe capex
  double truck = 0.0;        // fleet capex
  double compression = 0.0;  // storage, station and pipeline compressor capex
  double electricity = 0.0;  // electrolysis and compression power
  double gas = 0.0;
  double truck_opex = 0.0;
  double emission = 0.0;
  double lost_load = 0.0;

  double total() const;
  // (name, value) in a fixed order.
  std::vector<std::pair<std::string, double>> terms() const;
};

struct CapacitySummary {
  std::map<std::string, double> generation;        // tonne/hour by tech
  std::map<std::string, double> storage;           // tonne by tech
  std::map<std::string, double> truck_fleet;       // trucks by type
  std::map<std::string, double> truck_capacity;    // tonne by type
  double pipeline_flow = 0.0;                      // tonne/hour
};

struct FamilyCheck {
  double max_violation = 0.0;
  std::string worst;  // constraint label at the max
};

struct AuditReport {
  // balance, production, storage, pipeline, truck, transmission,
  // compression, bounds.
  std::map<std::string, FamilyCheck> families;
  CostBreakdown costs;
  double solver_objective = 0.0;
  double served_demand = 0.0;   // tonne/year, lost load excluded
  double lost_demand = 0.0;     // tonne/year
  std::map<std::string, double> generation_output;   // tonne/year by tech
  std::map<std::string, double> truck_utilization;   // tonne/year delivered by type
  std::map<std::string, double> storage_throughput;  // tonne/year discharged by tech
  CapacitySummary capacity;
  std::vector<std::string> truck_diagnostics;
  double tolerance = kAuditTolerance;

  double max_violation() const;
  bool pass() const;
  std::optional<std::string> failing_family() const;
  std::string to_json() const;
};

class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws AuditError unless the solution is optimal (or a node-limited
/// incumbent) and MissingVariableError
/// when a required value is absent.
/// Fixed-route rows depend on the build options' fleet convention.
AuditReport audit(const Solution& solution, const Network& network,
                  const TechnologyCatalog& catalog, const TimeGrid& grid,
                  const Scenario& scenario, const BuildOptions& options = {});

CostBreakdown recompute_objective(const Solution& solution, const Network& network,
                                  const TechnologyCatalog& catalog, const TimeGrid& grid,
                                  const Scenario& scenario);

/// Total annual cost over served demand in kg; empty when nothing is served.
std::optional<double> unit_hydrogen_cost(const CostBreakdown& costs, double served_tonnes);
std::optional<double> unit_hydrogen_cost(const AuditReport& report);

/// Truck network identities (fleet split, decomposition, inventory and
/// transit recursions, delay windows, nonnegativity and, in integer mode,
/// integrality). One message per violated identity above tolerance.
std::vector<std::string> truck_state_audit(const Solution& solution, const Network& network,
                                           const TechnologyCatalog& catalog,
                                           const TimeGrid& grid, const Scenario& scenario,
                                           double tolerance = kAuditTolerance,
                                           const BuildOptions& options = {});

}  // namespace hsc

#endif  // HSC_AUDIT_AUDIT_HPP_
