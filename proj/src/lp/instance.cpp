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

#include "hsc/lp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hsc {

std::string_view var_kind_tag(VarKind kind) {
  switch (kind) {
    case VarKind::kGenUnits: return "gen_units";
    case VarKind::kGenOutput: return "gen_out";
    case VarKind::kGenOnline: return "gen_online";
    case VarKind::kGenStartup: return "gen_up";
    case VarKind::kGenShutdown: return "gen_down";
    case VarKind::kGasUse: return "gas_use";
    case VarKind::kTransport: return "transport";
    case VarKind::kLostLoad: return "lost_load";
    case VarKind::kCompPower: return "comp_power";
    case VarKind::kStoCapacity: return "sto_cap";
    case VarKind::kStoRate: return "sto_rate";
    case VarKind::kStoCharge: return "sto_charge";
    case VarKind::kStoDischarge: return "sto_discharge";
    case VarKind::kStoLevel: return "sto_level";
    case VarKind::kPipeLines: return "pipe_lines";
    case VarKind::kPipeIn: return "pipe_in";
    case VarKind::kPipeOut: return "pipe_out";
    case VarKind::kLinepack: return "linepack";
    case VarKind::kFleet: return "fleet";
    case VarKind::kFleetFull: return "fleet_full";
    case VarKind::kFleetEmpty: return "fleet_empty";
    case VarKind::kTransitFull: return "transit_full";
    case VarKind::kTransitEmpty: return "transit_empty";
    case VarKind::kDepartFull: return "depart_full";
    case VarKind::kDepartEmpty: return "depart_empty";
    case VarKind::kArriveFull: return "arrive_full";
    case VarKind::kArriveEmpty: return "arrive_empty";
    case VarKind::kParkedFull: return "parked_full";
    case VarKind::kParkedEmpty: return "parked_empty";
    case VarKind::kCharged: return "charged";
    case VarKind::kDischarged: return "discharged";
    case VarKind::kStationCap: return "station_cap";
    case VarKind::kRouteFleet: return "route_fleet";
    case VarKind::kRouteLoads: return "route_loads";
    case VarKind::kGeneric: return "x";
  }
  return "x";
}

std::string make_key(VarKind kind, std::string_view tech, std::string_view site,
                     int step) {
  std::string key(var_kind_tag(kind));
  if (!tech.empty()) {
    key += '/';
    key += tech;
  }
  if (!site.empty()) {
    key += '/';
    key += site;
  }
  if (step >= 0) {
    key += '/';
    key += std::to_string(step);
  }
  return key;
}

std::string VarKey::str() const { return make_key(kind, tech, site, step); }

std::string path_site(std::string_view from, std::string_view to) {
  std::string s(from);
  s += '>';
  s += to;
  return s;
}

int VariableRegistry::add(std::string key, double lower, double upper,
                          double cost, bool integer) {
  if (lower > upper) {
    throw std::logic_error("variable " + key + " has lower > upper");
  }
  const int j = static_cast<int>(vars_.size());
  auto [it, inserted] = index_.emplace(key, j);
  if (!inserted) throw std::logic_error("duplicate variable key " + key);
  vars_.push_back(Variable{std::move(key), lower, upper, cost, integer});
  return j;
}

int VariableRegistry::find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? -1 : it->second;
}

int VariableRegistry::integer_count() const {
  return static_cast<int>(std::count_if(vars_.begin(), vars_.end(),
                                        [](const Variable& v) { return v.integer; }));
}

std::string_view row_family_tag(RowFamily family) {
  switch (family) {
    case RowFamily::kBalance: return "balance";
    case RowFamily::kProduction: return "production";
    case RowFamily::kFuel: return "fuel";
    case RowFamily::kStorage: return "storage";
    case RowFamily::kPipeline: return "pipeline";
    case RowFamily::kTransmission: return "transmission";
    case RowFamily::kCompression: return "compression";
    case RowFamily::kTruckFleet: return "truck_fleet";
    case RowFamily::kTruckDecomposition: return "truck_decomposition";
    case RowFamily::kTruckInventory: return "truck_inventory";
    case RowFamily::kTruckTransit: return "truck_transit";
    case RowFamily::kTruckDelay: return "truck_delay";
    case RowFamily::kTruckStation: return "truck_station";
    case RowFamily::kExisting: return "existing";
    case RowFamily::kOther: return "other";
  }
  return "other";
}

double Row::lower_activity() const {
  switch (sense) {
    case RowSense::kEqual:
      if (has_range && range < 0.0) return rhs + range;
      return rhs;
    case RowSense::kLessEqual:
      return has_range ? rhs - std::abs(range) : -kInf;
    case RowSense::kGreaterEqual:
      return rhs;
  }
  return rhs;
}

double Row::upper_activity() const {
  switch (sense) {
    case RowSense::kEqual:
      if (has_range && range > 0.0) return rhs + range;
      return rhs;
    case RowSense::kLessEqual:
      return rhs;
    case RowSense::kGreaterEqual:
      return has_range ? rhs + std::abs(range) : kInf;
  }
  return rhs;
}

std::int64_t MilpInstance::num_nonzeros() const {
  std::int64_t nnz = 0;
  for (const auto& r : rows) nnz += static_cast<std::int64_t>(r.cols.size());
  return nnz;
}

int MilpInstance::count_rows(RowFamily family) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [&](const Row& r) { return r.family == family; }));
}

Row& MilpInstance::add_row(std::string name, RowFamily family, RowSense sense,
                           double rhs,
                           const std::vector<std::pair<int, double>>& terms) {
  if (!std::isfinite(rhs)) throw std::logic_error("row " + name + " has non-finite rhs");
  std::map<int, double> merged;
  for (const auto& [col, coef] : terms) merged[col] += coef;
  Row row;
  row.name = std::move(name);
  row.family = family;
  row.sense = sense;
  row.rhs = rhs;
  row.cols.reserve(merged.size());
  row.coefs.reserve(merged.size());
  for (const auto& [col, coef] : merged) {
    if (coef == 0.0) continue;
    row.cols.push_back(col);
    row.coefs.push_back(coef);
  }
  rows.push_back(std::move(row));
  return rows.back();
}

double MilpInstance::objective_value(const std::vector<double>& x) const {
  double obj = objective_offset;
  for (int j = 0; j < vars.size(); ++j) obj += vars[j].cost * x[static_cast<size_t>(j)];
  return obj;
}

double MilpInstance::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < vars.size(); ++j) {
    const double v = x[static_cast<size_t>(j)];
    worst = std::max({worst, vars[j].lower - v, v - vars[j].upper});
  }
  for (const auto& r : rows) {
    double act = 0.0;
    for (size_t k = 0; k < r.cols.size(); ++k) {
      act += r.coefs[k] * x[static_cast<size_t>(r.cols[k])];
    }
    worst = std::max({worst, r.lower_activity() - act, act - r.upper_activity()});
  }
  return worst;
}

void MilpInstance::check() const {
  const int n = vars.size();
  for (int j = 0; j < n; ++j) {
    if (vars[j].lower > vars[j].upper) {
      throw std::logic_error("variable " + vars[j].key + " has lower > upper");
    }
    if (!std::isfinite(vars[j].cost)) {
      throw std::logic_error("variable " + vars[j].key + " has non-finite cost");
    }
  }
  for (const auto& r : rows) {
    if (!std::isfinite(r.rhs)) throw std::logic_error("row " + r.name + " has non-finite rhs");
    if (r.cols.size() != r.coefs.size()) {
      throw std::logic_error("row " + r.name + " is malformed");
    }
    for (size_t k = 0; k < r.cols.size(); ++k) {
      if (r.cols[k] < 0 || r.cols[k] >= n) {
        throw std::logic_error("row " + r.name + " references an unknown column");
      }
      if (r.coefs[k] == 0.0 || !std::isfinite(r.coefs[k])) {
        throw std::logic_error("row " + r.name + " stores a zero or non-finite coefficient");
      }
    }
  }
}

}  // namespace hsc
