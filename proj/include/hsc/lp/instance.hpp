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

// Sparse MILP container: a registry of named variables (bounds, objective
// coefficient, integrality) plus constraint rows. Minimization only.

#ifndef HSC_LP_INSTANCE_HPP_
#define HSC_LP_INSTANCE_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hsc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Semantic variable families. The string tag is the first component of the
/// variable key and is part of the solution CSV schema.
enum class VarKind : std::uint8_t {
  kGenUnits,      // N      invested units
  kGenOutput,     // h^GEN
  kGenOnline,     // n
  kGenStartup,    // n^UP
  kGenShutdown,   // n^DOWN
  kGasUse,        // g^GAS
  kTransport,     // h^TRA
  kLostLoad,      // h^LOS
  kCompPower,     // p^COM
  kStoCapacity,   // V^STO
  kStoRate,       // H^STO
  kStoCharge,     // h^CHA
  kStoDischarge,  // h^DIS
  kStoLevel,      // stored inventory state
  kPipeLines,     // l
  kPipeIn,        // h^PIP+ delivered at the path's origin zone
  kPipeOut,       // h^PIP- drawn at the path's origin zone
  kLinepack,      // linepack state
  kFleet,         // V
  kFleetFull,     // v^F
  kFleetEmpty,    // v^E
  kTransitFull,   // u^F
  kTransitEmpty,  // u^E
  kDepartFull,    // x^F
  kDepartEmpty,   // x^E
  kArriveFull,    // y^F
  kArriveEmpty,   // y^E
  kParkedFull,    // q^F
  kParkedEmpty,   // q^E
  kCharged,       // q^CHA
  kDischarged,    // q^DIS
  kStationCap,    // H^TRU
  kRouteFleet,    // dedicated per-route fleet (existing mode)
  kRouteLoads,    // loads dispatched per step on a route (existing mode)
  kGeneric,       // imported from MPS without semantic key
};

std::string_view var_kind_tag(VarKind kind);

/// (kind, tech, site, step). Empty tech/site and step < 0 are omitted
/// from the string form "tag/tech/site/step".
struct VarKey {
  VarKind kind = VarKind::kGeneric;
  std::string tech;
  std::string site;
  int step = -1;

  std::string str() const;
};

std::string make_key(VarKind kind, std::string_view tech, std::string_view site,
                     int step = -1);
// Site string for a directed path or an unordered pair.
std::string path_site(std::string_view from, std::string_view to);

struct Variable {
  std::string key;
  double lower = 0.0;
  double upper = kInf;
  double cost = 0.0;
  bool integer = false;
  // Branching priority: higher goes first, and the dive heuristic rounds
  // positive-priority columns up. Not carried by MPS.
  int priority = 0;
};

class VariableRegistry {
 public:
  int add(std::string key, double lower, double upper, double cost,
          bool integer = false);
  int add(const VarKey& key, double lower, double upper, double cost,
          bool integer = false) {
    return add(key.str(), lower, upper, cost, integer);
  }
  int find(std::string_view key) const;
  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& operator[](int j) const { return vars_[static_cast<size_t>(j)]; }
  Variable& operator[](int j) { return vars_[static_cast<size_t>(j)]; }
  const std::vector<Variable>& all() const { return vars_; }
  int integer_count() const;

 private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, int> index_;
};

enum class RowSense : std::uint8_t { kEqual, kLessEqual, kGreaterEqual };

/// Constraint family tags used for structural counts and reporting.
enum class RowFamily : std::uint8_t {
  kBalance,
  kProduction,
  kFuel,
  kStorage,
  kPipeline,
  kTransmission,
  kCompression,
  kTruckFleet,
  kTruckDecomposition,
  kTruckInventory,
  kTruckTransit,
  kTruckDelay,
  kTruckStation,
  kExisting,
  kOther,
};

std::string_view row_family_tag(RowFamily family);

/// Row: sum(coef * x) (sense) rhs. A nonzero range turns the row into
/// rhs-range semantics of the MPS RANGES section; builders leave it 0.
struct Row {
  std::string name;
  RowFamily family = RowFamily::kOther;
  RowSense sense = RowSense::kEqual;
  double rhs = 0.0;
  double range = 0.0;
  bool has_range = false;
  std::vector<int> cols;
  std::vector<double> coefs;

  // Activity bounds implied by sense/rhs/range.
  double lower_activity() const;
  double upper_activity() const;
};

struct MilpInstance {
  std::string name = "HSC";
  VariableRegistry vars;
  std::vector<Row> rows;
  double objective_offset = 0.0;
  std::string scenario_hash;
  std::string build_options;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return vars.size(); }
  std::int64_t num_nonzeros() const;
  bool has_integers() const { return vars.integer_count() > 0; }
  int count_rows(RowFamily family) const;

  // Appends a row, dropping zero coefficients and merging repeated columns.
  Row& add_row(std::string name, RowFamily family, RowSense sense, double rhs,
               const std::vector<std::pair<int, double>>& terms);

  // c.x + offset.
  double objective_value(const std::vector<double>& x) const;
  // Largest bound or row violation of x (absolute).
  double max_violation(const std::vector<double>& x) const;

  // Checks the container invariants: registered columns, finite rhs,
  // no stored zeros, lb <= ub. Throws std::logic_error.
  void check() const;
};

}  // namespace hsc

#endif  // HSC_LP_INSTANCE_HPP_
