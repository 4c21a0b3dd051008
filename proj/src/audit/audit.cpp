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

#include "hsc/audit/audit.hpp"

#include <algorithm>
#include <cmath>

#include "hsc/lp/instance.hpp"
#include "json.hpp"

namespace hsc {
namespace {

int steps_for_hours(int hours, double dt) {
  return hours <= 0 ? 0 : static_cast<int>(std::ceil(hours / dt - 1e-9));
}

double series(const ZoneSeries& s, int z, int t) { return s.empty() ? 0.0 : s.at(z, t); }

// Step t+k wrapped inside t's period.
int wrap(const TimeGrid& grid, int t, int k) {
  const int first = grid.period_first(t);
  const int len = grid.period_last(t) - first + 1;
  return first + (((t - first + k) % len) + len) % len;
}

struct PipePair {
  int a = 0, b = 0;
  double distance = 0.0;
  std::string pair, ab, ba;
};

std::vector<PipePair> pipe_pairs(const Network& net) {
  std::vector<PipePair> out;
  for (const Path& p : net.paths) {
    const int a = net.zone_index(p.from_zone);
    const int b = net.zone_index(p.to_zone);
    if (a > b) continue;
    const bool back = std::any_of(net.paths.begin(), net.paths.end(), [&](const Path& q) {
      return q.from_zone == p.to_zone && q.to_zone == p.from_zone;
    });
    if (!back) continue;
    out.push_back({a, b, p.distance, path_site(p.from_zone, p.to_zone),
                   path_site(p.from_zone, p.to_zone), path_site(p.to_zone, p.from_zone)});
  }
  return out;
}

class Auditor {
 public:
  Auditor(const Solution& sol, const Network& net, const TechnologyCatalog& cat,
          const TimeGrid& grid, const Scenario& sc, const BuildOptions& opt, double tol)
      : sol_(sol), net_(net), cat_(cat), grid_(grid), sc_(sc), opt_(opt), tol_(tol) {
    for (const char* f : {"balance", "production", "storage", "pipeline", "truck",
                          "transmission", "compression", "bounds"}) {
      families_[f];
    }
  }

  double v(VarKind kind, const std::string& tech, const std::string& site, int t = -1) {
    const std::string key = make_key(kind, tech, site, t);
    const double x = sol_.value(key);
    if (nonneg(kind)) check("bounds", key + " >= 0", std::max(0.0, -x));
    return x;
  }

  void eq(const std::string& fam, const std::string& label, double lhs, double rhs) {
    check(fam, label, std::abs(lhs - rhs));
  }
  void le(const std::string& fam, const std::string& label, double lhs, double rhs) {
    check(fam, label, std::max(0.0, lhs - rhs));
  }
  void integral(const std::string& fam, const std::string& label, double x) {
    check(fam, label + " integral", std::abs(x - std::round(x)));
  }

  void check(const std::string& fam, const std::string& label, double viol) {
    FamilyCheck& fc = families_[fam];
    if (viol > fc.max_violation) {
      fc.max_violation = viol;
      fc.worst = label;
    }
    if (fam == "truck" && viol > tol_) {
      diagnostics_.push_back(label + " violated by " + std::to_string(viol));
    }
  }

  void balance();
  void production();
  void storage();
  void pipelines();
  void flexible_trucks();
  void fixed_routes();
  void transmission_and_compression();

  std::map<std::string, FamilyCheck> families_;
  std::vector<std::string> diagnostics_;

 private:
  static bool nonneg(VarKind k) { return k != VarKind::kTransport; }
  const std::string& zid(int z) const { return net_.zones[static_cast<size_t>(z)].id; }
  int nz() const { return static_cast<int>(net_.zones.size()); }
  int nt() const { return grid_.size(); }
  bool existing() const { return sc_.truck_mode == TruckMode::kFixedRouteExisting; }
  // Steps from dispatch to delivery and truck-steps per load, fixed-route mode.
  std::pair<int, int> route_timing(int delay) const {
    if (opt_.existing_convention == ExistingFleetConvention::kRoundTrip) {
      return {delay + 1, 2 * delay + 2};
    }
    return {0, std::max(1, delay)};
  }
  // Net delivery into zone z at t by trucks (tonne/hour).
  double truck_delivery(int z, int t);

  const Solution& sol_;
  const Network& net_;
  const TechnologyCatalog& cat_;
  const TimeGrid& grid_;
  const Scenario& sc_;
  const BuildOptions& opt_;
  double tol_;

};

void Auditor::balance() {
  for (int z = 0; z < nz(); ++z) {
    const Zone& zone = net_.zones[static_cast<size_t>(z)];
    for (int t = 0; t < nt(); ++t) {
      double supply = v(VarKind::kTransport, "", zone.id, t);
      for (const GenerationTech& g : cat_.generation) {
        if (generation_allowed(zone, g)) supply += v(VarKind::kGenOutput, g.id, zone.id, t);
      }
      for (const StorageTech& s : cat_.storage) {
        if (!storage_allowed(zone, s)) continue;
        supply += v(VarKind::kStoDischarge, s.id, zone.id, t);
        supply -= v(VarKind::kStoCharge, s.id, zone.id, t);
      }
      const double d = series(sc_.demand, z, t);
      const double lost = v(VarKind::kLostLoad, "", zone.id, t);
      le("bounds", make_key(VarKind::kLostLoad, "", zone.id, t) + " <= demand", lost, d);
      eq("balance", "balance " + zone.id + " t=" + std::to_string(t), supply, d - lost);
    }
  }
}

void Auditor::production() {
  const double dt = grid_.step_hours();
  for (const Zone& zone : net_.zones) {
    for (const GenerationTech& g : cat_.generation) {
      if (!generation_allowed(zone, g)) continue;
      const std::string tag = g.id + "@" + zone.id;
      const double units = v(VarKind::kGenUnits, g.id, zone.id);
      const int up = steps_for_hours(g.min_up_hours, dt);
      const int down = steps_for_hours(g.min_down_hours, dt);
      for (int t = 0; t < nt(); ++t) {
        const std::string at = tag + " t=" + std::to_string(t);
        const double out = v(VarKind::kGenOutput, g.id, zone.id, t);
        const double on = v(VarKind::kGenOnline, g.id, zone.id, t);
        le("production", "max output " + at, out, g.max_output_frac * g.unit_capacity * on);
        le("production", "min output " + at, g.min_output_frac * g.unit_capacity * on, out);
        le("production", "online <= units " + at, on, units);
        const double on_prev = v(VarKind::kGenOnline, g.id, zone.id, grid_.cyclic_prev(t));
        eq("production", "switching " + at, on - on_prev,
           v(VarKind::kGenStartup, g.id, zone.id, t) -
               v(VarKind::kGenShutdown, g.id, zone.id, t));
        const int first = grid_.period_first(t);
        if (up > 0) {
          double started = 0.0;
          for (int e = std::max(first, t - up); e <= t; ++e) {
            started += v(VarKind::kGenStartup, g.id, zone.id, e);
          }
          le("production", "min up " + at, started, on);
        }
        if (down > 0) {
          double stopped = 0.0;
          for (int e = std::max(first, t - down); e <= t; ++e) {
            stopped += v(VarKind::kGenShutdown, g.id, zone.id, e);
          }
          le("production", "min down " + at, stopped, units - on);
        }
        if (g.gas_rate > 0.0) {
          eq("production", "fuel " + at, v(VarKind::kGasUse, g.id, zone.id, t),
             g.gas_rate * out);
        }
      }
    }
  }
}

void Auditor::storage() {
  const double dt = grid_.step_hours();
  for (const Zone& zone : net_.zones) {
    for (const StorageTech& s : cat_.storage) {
      if (!storage_allowed(zone, s)) continue;
      const std::string tag = s.id + "@" + zone.id;
      const double cap = v(VarKind::kStoCapacity, s.id, zone.id);
      const double rate = v(VarKind::kStoRate, s.id, zone.id);
      for (int t = 0; t < nt(); ++t) {
        const std::string at = tag + " t=" + std::to_string(t);
        const double level = v(VarKind::kStoLevel, s.id, zone.id, t);
        const double prev = v(VarKind::kStoLevel, s.id, zone.id, grid_.cyclic_prev(t));
        const double cha = v(VarKind::kStoCharge, s.id, zone.id, t);
        const double dis = v(VarKind::kStoDischarge, s.id, zone.id, t);
        eq("storage", "inventory " + at, level,
           prev + dt * (s.charge_efficiency * cha - dis / s.charge_efficiency));
        le("storage", "capacity " + at, level, cap);
        le("storage", "cushion " + at, s.min_soc_frac * cap, level);
        le("storage", "charge rate " + at, cha, rate);
      }
    }
  }
}

void Auditor::pipelines() {
  const double dt = grid_.step_hours();
  for (const PipePair& pp : pipe_pairs(net_)) {
    for (const PipelineType& pt : cat_.pipelines) {
      const std::string tag = pt.id + "@" + pp.pair;
      const double lines = v(VarKind::kPipeLines, pt.id, pp.pair);
      const double pack_cap = pt.linepack_per_mile * pp.distance * lines;
      double pack = 0.0;
      for (int t = 0; t < nt(); ++t) {
        const std::string at = tag + " t=" + std::to_string(t);
        double net_exchange = 0.0;  // delivered minus drawn, both ends
        for (const std::string* site : {&pp.ab, &pp.ba}) {
          const double in = v(VarKind::kPipeIn, pt.id, *site, t);
          const double out = v(VarKind::kPipeOut, pt.id, *site, t);
          le("pipeline", "delivery cap " + *site + " " + at, in, pt.max_flow * lines);
          le("pipeline", "draw cap " + *site + " " + at, out, pt.max_flow * lines);
          net_exchange += in - out;
        }
        if (grid_.is_period_start(t)) pack = 0.0;
        pack -= net_exchange * dt;
        const double stored = v(VarKind::kLinepack, pt.id, pp.pair, t);
        eq("pipeline", "linepack " + at, stored, pack);
        le("pipeline", "linepack max " + at, stored, pack_cap);
        le("pipeline", "linepack min " + at, pt.min_linepack_frac * pack_cap, stored);
        if (t == grid_.period_last(t)) eq("pipeline", "linepack closes " + at, stored, 0.0);
        // Continue the recursion from the recorded state so one slip is
        // reported once rather than carried forward.
        pack = stored;
      }
    }
  }
}

void Auditor::flexible_trucks() {
  const int np = static_cast<int>(net_.paths.size());
  const bool integer = sc_.truck_mode == TruckMode::kInteger;
  for (const TruckType& tt : cat_.trucks) {
    const double fleet = v(VarKind::kFleet, tt.id, "");
    if (integer) integral("truck", "fleet " + tt.id, fleet);
    auto count = [&](VarKind k, const std::string& site, int t) {
      const double x = v(k, tt.id, site, t);
      if (integer) integral("truck", make_key(k, tt.id, site, t), x);
      return x;
    };
    for (int t = 0; t < nt(); ++t) {
      const int prev = grid_.cyclic_prev(t);
      const std::string at = tt.id + " t=" + std::to_string(t);
      const double full = count(VarKind::kFleetFull, "", t);
      const double empty = count(VarKind::kFleetEmpty, "", t);
      eq("truck", "fleet split " + at, full + empty, fleet);
      double sum_full = 0.0, sum_empty = 0.0;
      for (int p = 0; p < np; ++p) {
        const Path& path = net_.paths[static_cast<size_t>(p)];
        const std::string site = path_site(path.from_zone, path.to_zone);
        sum_full += count(VarKind::kTransitFull, site, t);
        sum_empty += count(VarKind::kTransitEmpty, site, t);
      }
      for (int z = 0; z < nz(); ++z) {
        sum_full += count(VarKind::kParkedFull, zid(z), t);
        sum_empty += count(VarKind::kParkedEmpty, zid(z), t);
      }
      eq("truck", "full decomposition " + at, full, sum_full);
      eq("truck", "empty decomposition " + at, empty, sum_empty);

      for (int z = 0; z < nz(); ++z) {
        const std::string zat = tt.id + "@" + zid(z) + " t=" + std::to_string(t);
        const double cha = count(VarKind::kCharged, zid(z), t);
        const double dis = count(VarKind::kDischarged, zid(z), t);
        double in_full = 0.0, in_empty = 0.0, out_full = 0.0, out_empty = 0.0;
        if (prev != t) {
          for (int p = 0; p < np; ++p) {
            const Path& path = net_.paths[static_cast<size_t>(p)];
            const std::string site = path_site(path.from_zone, path.to_zone);
            if (path.to_zone == zid(z)) {
              in_full += v(VarKind::kArriveFull, tt.id, site, prev);
              in_empty += v(VarKind::kArriveEmpty, tt.id, site, prev);
            }
            if (path.from_zone == zid(z)) {
              out_full += v(VarKind::kDepartFull, tt.id, site, prev);
              out_empty += v(VarKind::kDepartEmpty, tt.id, site, prev);
            }
          }
        }
        // With a single-step period the state is its own predecessor and
        // the movement terms cancel.
        const double pf_prev = prev != t ? v(VarKind::kParkedFull, tt.id, zid(z), prev) : 0.0;
        const double pe_prev = prev != t ? v(VarKind::kParkedEmpty, tt.id, zid(z), prev) : 0.0;
        const double pf = v(VarKind::kParkedFull, tt.id, zid(z), t);
        const double pe = v(VarKind::kParkedEmpty, tt.id, zid(z), t);
        eq("truck", "full inventory " + zat, pf, pf_prev + cha - dis + in_full - out_full);
        eq("truck", "empty inventory " + zat, pe, pe_prev - cha + dis + in_empty - out_empty);
        le("truck", "station " + zat, cha * tt.cargo_capacity / grid_.step_hours(),
           v(VarKind::kStationCap, tt.id, zid(z)));
      }

      for (int p = 0; p < np; ++p) {
        const Path& path = net_.paths[static_cast<size_t>(p)];
        const std::string site = path_site(path.from_zone, path.to_zone);
        const std::string pat = tt.id + "@" + site + " t=" + std::to_string(t);
        const VarKind kinds[2][3] = {
            {VarKind::kTransitFull, VarKind::kDepartFull, VarKind::kArriveFull},
            {VarKind::kTransitEmpty, VarKind::kDepartEmpty, VarKind::kArriveEmpty}};
        for (int f = 0; f < 2; ++f) {
          const char* load = f == 0 ? "full" : "empty";
          const VarKind uk = kinds[f][0], xk = kinds[f][1], yk = kinds[f][2];
          const double u = v(uk, tt.id, site, t);
          if (prev != t) {
            eq("truck", std::string("transit ") + load + " " + pat, u,
               v(uk, tt.id, site, prev) + v(xk, tt.id, site, prev) - v(yk, tt.id, site, prev));
          }
          double departed = 0.0, arriving = 0.0;
          for (int k = 1; k <= path.travel_delay; ++k) departed += v(xk, tt.id, site, wrap(grid_, t, -k));
          for (int k = 0; k < path.travel_delay; ++k) arriving += v(yk, tt.id, site, wrap(grid_, t, k));
          le("truck", std::string("departure window ") + load + " " + pat, departed, u);
          le("truck", std::string("arrival window ") + load + " " + pat, arriving, u);
        }
      }
    }
  }
}

void Auditor::fixed_routes() {
  const double dt = grid_.step_hours();
  const bool integer = opt_.existing_integer_fleets;
  for (const TruckType& tt : cat_.trucks) {
    for (int z = 0; z < nz(); ++z) {
      const double station = v(VarKind::kStationCap, tt.id, zid(z));
      for (int t = 0; t < nt(); ++t) {
        double charged = 0.0;
        for (const Path& path : net_.paths) {
          if (path.from_zone != zid(z)) continue;
          charged += v(VarKind::kRouteLoads, tt.id, path_site(path.from_zone, path.to_zone), t);
        }
        le("truck", "route station " + tt.id + "@" + zid(z) + " t=" + std::to_string(t),
           charged * tt.cargo_capacity / dt, station);
      }
    }
    for (const Path& path : net_.paths) {
      const std::string site = path_site(path.from_zone, path.to_zone);
      const double fleet = v(VarKind::kRouteFleet, tt.id, site);
      if (integer) integral("truck", "route fleet " + tt.id + "@" + site, fleet);
      const int cycle = route_timing(path.travel_delay).second;
      for (int t = 0; t < nt(); ++t) {
        const double loads = v(VarKind::kRouteLoads, tt.id, site, t);
        if (integer) integral("truck", make_key(VarKind::kRouteLoads, tt.id, site, t), loads);
        le("truck", "route capacity " + tt.id + "@" + site + " t=" + std::to_string(t),
           cycle * loads, fleet);
      }
    }
  }
}

double Auditor::truck_delivery(int z, int t) {
  const double dt = grid_.step_hours();
  double net = 0.0;
  for (const TruckType& tt : cat_.trucks) {
    const double load = tt.cargo_capacity / dt;
    if (!existing()) {
      net += load * ((1.0 - tt.boiloff_frac) * v(VarKind::kDischarged, tt.id, zid(z), t) -
                     v(VarKind::kCharged, tt.id, zid(z), t));
      continue;
    }
    for (const Path& path : net_.paths) {
      const std::string site = path_site(path.from_zone, path.to_zone);
      if (path.from_zone == zid(z)) net -= load * v(VarKind::kRouteLoads, tt.id, site, t);
      if (path.to_zone == zid(z)) {
        const int sent = wrap(grid_, t, -route_timing(path.travel_delay).first);
        net += (1.0 - tt.boiloff_frac) * load * v(VarKind::kRouteLoads, tt.id, site, sent);
      }
    }
  }
  return net;
}

void Auditor::transmission_and_compression() {
  const double dt = grid_.step_hours();
  const auto pairs = pipe_pairs(net_);
  for (int z = 0; z < nz(); ++z) {
    const Zone& zone = net_.zones[static_cast<size_t>(z)];
    for (int t = 0; t < nt(); ++t) {
      const std::string at = zone.id + " t=" + std::to_string(t);
      double pipe = 0.0, power = 0.0;
      for (const PipePair& pp : pairs) {
        for (const PipelineType& pt : cat_.pipelines) {
          const double per_tonne = pt.comp_elec_per_mile * pp.distance + pt.comp_elec_fixed;
          for (int e = 0; e < 2; ++e) {
            if ((e == 0 ? pp.a : pp.b) != z) continue;
            const std::string& site = e == 0 ? pp.ab : pp.ba;
            const double in = v(VarKind::kPipeIn, pt.id, site, t);
            const double out = v(VarKind::kPipeOut, pt.id, site, t);
            pipe += in - out;
            power += per_tonne * (in + out);
          }
        }
      }
      eq("transmission", "transmission " + at, v(VarKind::kTransport, "", zone.id, t),
         pipe + truck_delivery(z, t));
      for (const TruckType& tt : cat_.trucks) {
        double charged = 0.0;
        if (!existing()) {
          charged = v(VarKind::kCharged, tt.id, zone.id, t);
        } else {
          for (const Path& path : net_.paths) {
            if (path.from_zone == zone.id) {
              charged += v(VarKind::kRouteLoads, tt.id, path_site(path.from_zone, path.to_zone), t);
            }
          }
        }
        power += tt.station_electricity * tt.cargo_capacity / dt * charged;
      }
      for (const StorageTech& s : cat_.storage) {
        if (storage_allowed(zone, s)) {
          power += s.compressor_electricity * v(VarKind::kStoCharge, s.id, zone.id, t);
        }
      }
      eq("compression", "compression power " + at, v(VarKind::kCompPower, "", zone.id, t),
         power);
    }
  }
}

// A node-limited MILP run still carries a feasible incumbent worth auditing.
void require_optimal(const Solution& sol) {
  const bool incumbent = sol.status == SolveStatus::kNodeLimit && sol.has_values();
  if (sol.status != SolveStatus::kOptimal && !incumbent) {
    throw AuditError("audit needs a solved point, got " +
                     std::string(to_string(sol.status)));
  }
}

}  // namespace

double CostBreakdown::total() const {
  double sum = 0.0;
  for (const auto& [name, value] : terms()) sum += value;
  return sum;
}

std::vector<std::pair<std::string, double>> CostBreakdown::terms() const {
  return {{"production", production}, {"storage", storage},     {"pipeline", pipeline},
          {"truck", truck},           {"compression", compression},
          {"electricity", electricity}, {"gas", gas},         {"truck_opex", truck_opex},
          {"emission", emission},     {"lost_load", lost_load}};
}

double AuditReport::max_violation() const {
  double m = 0.0;
  for (const auto& [name, fc] : families) m = std::max(m, fc.max_violation);
  return m;
}

bool AuditReport::pass() const { return max_violation() <= tolerance; }

std::optional<std::string> AuditReport::failing_family() const {
  std::optional<std::string> worst;
  double m = tolerance;
  for (const auto& [name, fc] : families) {
    if (fc.max_violation > m) {
      m = fc.max_violation;
      worst = name;
    }
  }
  return worst;
}

std::string AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass();
  j["tolerance"] = tolerance;
  j["max_violation"] = max_violation();
  auto& fam = j["max_violation_by_family"];
  fam = nlohmann::ordered_json::object();
  for (const auto& [name, fc] : families) {
    fam[name] = {{"max_violation", fc.max_violation}, {"worst", fc.worst}};
  }
  auto& cb = j["cost_breakdown"];
  cb = nlohmann::ordered_json::object();
  for (const auto& [name, value] : costs.terms()) cb[name] = value;
  cb["total"] = costs.total();
  j["solver_objective"] = solver_objective;
  const auto unit = unit_hydrogen_cost(*this);
  j["unit_hydrogen_cost"] = unit ? nlohmann::ordered_json(*unit) : nlohmann::ordered_json();
  j["served_demand"] = served_demand;
  j["lost_demand"] = lost_demand;
  j["generation_output"] = generation_output;
  j["truck_utilization"] = truck_utilization;
  j["storage_throughput"] = storage_throughput;
  j["capacity"] = {{"generation", capacity.generation},
                   {"storage", capacity.storage},
                   {"truck_fleet", capacity.truck_fleet},
                   {"truck_capacity", capacity.truck_capacity},
                   {"pipeline_flow", capacity.pipeline_flow}};
  j["truck_diagnostics"] = truck_diagnostics;
  return j.dump(2) + "\n";
}

CostBreakdown recompute_objective(const Solution& sol, const Network& net,
                                  const TechnologyCatalog& cat, const TimeGrid& grid,
                                  const Scenario& sc) {
  require_optimal(sol);
  CostBreakdown c;
  const double r = sc.discount_rate;
  const double dt = grid.step_hours();
  const double co2 = sc.carbon_price;
  auto val = [&](VarKind k, const std::string& tech, const std::string& site, int t = -1) {
    return sol.value(make_key(k, tech, site, t));
  };
  const int nt = grid.size();
  for (int z = 0; z < static_cast<int>(net.zones.size()); ++z) {
    const Zone& zone = net.zones[static_cast<size_t>(z)];
    for (int t = 0; t < nt; ++t) {
      const double hours = grid.weight(t) * dt;
      const double price = series(sc.electricity_price, z, t);
      c.lost_load += hours * sc.lost_load_cost * val(VarKind::kLostLoad, "", zone.id, t);
      c.electricity += hours * price * val(VarKind::kCompPower, "", zone.id, t);
    }
    for (const GenerationTech& g : cat.generation) {
      if (!generation_allowed(zone, g)) continue;
      c.production += annuity_factor(g.lifetime_years, r) * effective_unit_capex(g, sc) *
                      val(VarKind::kGenUnits, g.id, zone.id);
      for (int t = 0; t < nt; ++t) {
        const double hours = grid.weight(t) * dt;
        const double out = val(VarKind::kGenOutput, g.id, zone.id, t);
        c.electricity += hours * series(sc.electricity_price, z, t) * g.electricity_rate * out;
        c.emission += hours * co2 * g.emission_rate * out;
        if (g.gas_rate > 0.0) {
          c.gas += hours * series(sc.gas_price, z, t) * val(VarKind::kGasUse, g.id, zone.id, t);
        }
      }
    }
    for (const StorageTech& s : cat.storage) {
      if (!storage_allowed(zone, s)) continue;
      const double delta = annuity_factor(s.lifetime_years, r);
      c.storage += delta * s.capex_per_tonne * val(VarKind::kStoCapacity, s.id, zone.id);
      c.compression += delta * s.compressor_capex * val(VarKind::kStoRate, s.id, zone.id);
    }
    for (const TruckType& tt : cat.trucks) {
      c.compression += annuity_factor(tt.lifetime_years, r) * tt.station_capex *
                       val(VarKind::kStationCap, tt.id, zone.id);
    }
  }
  for (const PipePair& pp : pipe_pairs(net)) {
    for (const PipelineType& pt : cat.pipelines) {
      const double lines = val(VarKind::kPipeLines, pt.id, pp.pair);
      const double scale = annuity_factor(pt.lifetime_years, r) * sc.pipeline_cost_factor;
      c.pipeline += scale * pt.capex_per_mile * pp.distance * lines;
      c.compression +=
          scale * (pt.comp_capex_per_mile * pp.distance + pt.comp_capex_fixed) * lines;
    }
  }
  const bool existing = sc.truck_mode == TruckMode::kFixedRouteExisting;
  for (const TruckType& tt : cat.trucks) {
    const double delta = annuity_factor(tt.lifetime_years, r);
    if (!existing) c.truck += delta * tt.unit_capex * val(VarKind::kFleet, tt.id, "");
    for (const Path& path : net.paths) {
      const std::string site = path_site(path.from_zone, path.to_zone);
      if (existing) c.truck += delta * tt.unit_capex * val(VarKind::kRouteFleet, tt.id, site);
      for (int t = 0; t < nt; ++t) {
        // Trips are counted per arrival; a fixed-route load is a full trip
        // out and an empty trip back.
        const double trips =
            existing ? 2.0 * val(VarKind::kRouteLoads, tt.id, site, t)
                     : val(VarKind::kArriveFull, tt.id, site, t) +
                           val(VarKind::kArriveEmpty, tt.id, site, t);
        const double miles = grid.weight(t) * path.distance * trips;
        c.truck_opex += tt.opex_per_mile * miles;
        c.emission += co2 * tt.emission_rate * tt.cargo_capacity * miles;
      }
    }
  }
  return c;
}

std::optional<double> unit_hydrogen_cost(const CostBreakdown& costs, double served_tonnes) {
  if (!(served_tonnes > 0.0)) return std::nullopt;
  return costs.total() / (served_tonnes * 1000.0);
}

std::optional<double> unit_hydrogen_cost(const AuditReport& report) {
  return unit_hydrogen_cost(report.costs, report.served_demand);
}

AuditReport audit(const Solution& sol, const Network& net, const TechnologyCatalog& cat,
                  const TimeGrid& grid, const Scenario& sc, const BuildOptions& options) {
  require_optimal(sol);
  Auditor a(sol, net, cat, grid, sc, options, kAuditTolerance);
  a.balance();
  a.production();
  a.storage();
  a.pipelines();
  if (sc.truck_mode == TruckMode::kFixedRouteExisting) {
    a.fixed_routes();
  } else {
    a.flexible_trucks();
  }
  a.transmission_and_compression();

  AuditReport rep;
  rep.families = a.families_;
  rep.truck_diagnostics = a.diagnostics_;
  rep.costs = recompute_objective(sol, net, cat, grid, sc);
  rep.solver_objective = sol.objective;

  const double dt = grid.step_hours();
  const int nt = grid.size();
  auto val = [&](VarKind k, const std::string& tech, const std::string& site, int t = -1) {
    return sol.value(make_key(k, tech, site, t));
  };
  for (int z = 0; z < static_cast<int>(net.zones.size()); ++z) {
    const Zone& zone = net.zones[static_cast<size_t>(z)];
    for (int t = 0; t < nt; ++t) {
      const double hours = grid.weight(t) * dt;
      const double lost = val(VarKind::kLostLoad, "", zone.id, t);
      rep.lost_demand += hours * lost;
      rep.served_demand += hours * (series(sc.demand, z, t) - lost);
    }
    for (const GenerationTech& g : cat.generation) {
      if (!generation_allowed(zone, g)) continue;
      rep.capacity.generation[g.id] += g.unit_capacity * val(VarKind::kGenUnits, g.id, zone.id);
      double& out = rep.generation_output[g.id];
      for (int t = 0; t < nt; ++t) {
        out += grid.weight(t) * dt * val(VarKind::kGenOutput, g.id, zone.id, t);
      }
    }
    for (const StorageTech& s : cat.storage) {
      if (!storage_allowed(zone, s)) continue;
      rep.capacity.storage[s.id] += val(VarKind::kStoCapacity, s.id, zone.id);
      double& thr = rep.storage_throughput[s.id];
      for (int t = 0; t < nt; ++t) {
        thr += grid.weight(t) * dt * val(VarKind::kStoDischarge, s.id, zone.id, t);
      }
    }
  }
  for (const GenerationTech& g : cat.generation) {
    rep.capacity.generation.try_emplace(g.id, 0.0);
    rep.generation_output.try_emplace(g.id, 0.0);
  }
  for (const StorageTech& s : cat.storage) {
    rep.capacity.storage.try_emplace(s.id, 0.0);
    rep.storage_throughput.try_emplace(s.id, 0.0);
  }
  const bool existing = sc.truck_mode == TruckMode::kFixedRouteExisting;
  for (const TruckType& tt : cat.trucks) {
    double fleet = 0.0, delivered = 0.0;
    if (!existing) {
      fleet = val(VarKind::kFleet, tt.id, "");
      for (const Zone& zone : net.zones) {
        for (int t = 0; t < nt; ++t) {
          delivered += grid.weight(t) * val(VarKind::kDischarged, tt.id, zone.id, t);
        }
      }
    } else {
      for (const Path& path : net.paths) {
        const std::string site = path_site(path.from_zone, path.to_zone);
        fleet += val(VarKind::kRouteFleet, tt.id, site);
        for (int t = 0; t < nt; ++t) {
          delivered += grid.weight(t) * val(VarKind::kRouteLoads, tt.id, site, t);
        }
      }
    }
    rep.capacity.truck_fleet[tt.id] = fleet;
    rep.capacity.truck_capacity[tt.id] = fleet * tt.cargo_capacity;
    rep.truck_utilization[tt.id] = delivered * (1.0 - tt.boiloff_frac) * tt.cargo_capacity;
  }
  for (const PipePair& pp : pipe_pairs(net)) {
    for (const PipelineType& pt : cat.pipelines) {
      rep.capacity.pipeline_flow += pt.max_flow * val(VarKind::kPipeLines, pt.id, pp.pair);
    }
  }
  return rep;
}

std::vector<std::string> truck_state_audit(const Solution& sol, const Network& net,
                                           const TechnologyCatalog& cat, const TimeGrid& grid,
                                           const Scenario& sc, double tolerance,
                                           const BuildOptions& options) {
  require_optimal(sol);
  Auditor a(sol, net, cat, grid, sc, options, tolerance);
  if (sc.truck_mode == TruckMode::kFixedRouteExisting) {
    a.fixed_routes();
  } else {
    a.flexible_trucks();
  }
  std::vector<std::string> out = a.diagnostics_;
  const FamilyCheck& b = a.families_["bounds"];
  if (b.max_violation > tolerance) {
    out.push_back(b.worst + " violated by " + std::to_string(b.max_violation));
  }
  return out;
}

}  // namespace hsc
