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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hsc/audit/audit.hpp"
#include "hsc/io/case_io.hpp"
#include "hsc/lp/builder.hpp"
#include "hsc/solver/mps.hpp"
#include "hsc/solver/simplex.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/toy_cases.hpp"

using namespace hsc;
using namespace hsc::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Solution solve_instance(const MilpInstance& inst, const SolverOptions& opts = {}) {
  return inst.has_integers() ? solve_milp(inst, opts) : solve_lp(inst, opts);
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// ---------------------------------------------------------------- 1

struct NamedCase {
  std::string name;
  CaseBundle bundle;
};

CaseBundle pipe_pair() {
  TruckCaseOptions o;
  o.steps = 6;
  o.demand_b = 5.0;
  CaseBundle b = two_zone_trucks(o);
  b.catalog = reference_catalog();
  b.catalog.trucks.clear();
  b.catalog.storage.clear();
  b.network.zones[1].eligible_generation.clear();
  return b;
}

std::vector<NamedCase> oracle_cases() {
  std::vector<NamedCase> out;
  out.push_back({"zero", zero_case(4)});
  out.push_back({"one-zone-smr", one_zone_smr(24, 5.0, 9.0)});
  TruckCaseOptions o;
  o.steps = 24;
  out.push_back({"trucks-relaxed", two_zone_trucks(o)});
  o.storage = true;
  o.gas_trucks_only = false;
  out.push_back({"trucks-storage-liquid", two_zone_trucks(o)});
  o = {};
  o.steps = 12;
  o.mode = TruckMode::kInteger;
  out.push_back({"trucks-integer", two_zone_trucks(o)});
  o.mode = TruckMode::kFixedRouteExisting;
  out.push_back({"trucks-existing", two_zone_trucks(o)});
  out.push_back({"pipeline-pair", pipe_pair()});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    out.push_back({"random-" + std::to_string(seed), random_truck_case(seed, TruckMode::kRelaxed)});
  }
  for (std::uint64_t seed = 11; seed <= 13; ++seed) {
    out.push_back({"random-int-" + std::to_string(seed),
                   random_truck_case(seed, TruckMode::kInteger)});
  }
  out.push_back({"northeast-mini", load_case(std::string(HSC_DATA_DIR) + "/northeast-mini")});
  return out;
}

Outcome oracle_agreement() {
  Outcome r;
  double worst_violation = 0.0, worst_obj = 0.0, slowest = 0.0;
  std::string slowest_name;
  const auto cases = oracle_cases();
  for (const NamedCase& c : cases) {
    const CaseBundle& b = c.bundle;
    const auto start = Clock::now();
    SolverOptions opts;
    opts.time_limit_seconds = 8.0;
    const MilpInstance inst = build(b.network, b.catalog, b.grid, b.scenario);
    const Solution sol = solve_instance(inst, opts);
    r.require(sol.has_values(), c.name + ": no solution (" + std::string(to_string(sol.status)) + ")");
    if (!sol.has_values()) continue;
    const AuditReport rep = audit(sol, b.network, b.catalog, b.grid, b.scenario);
    const double secs = seconds_since(start);
    const double obj_err = std::abs(rep.costs.total() - sol.objective) /
                           std::max(1.0, std::abs(sol.objective));
    worst_violation = std::max(worst_violation, rep.max_violation());
    worst_obj = std::max(worst_obj, obj_err);
    if (secs > slowest) {
      slowest = secs;
      slowest_name = c.name;
    }
    r.require(rep.max_violation() <= 1e-6,
              c.name + fmt(": max violation %.3g", rep.max_violation()));
    r.require(obj_err <= 1e-6, c.name + fmt(": objective mismatch %.3g", obj_err));
    r.require(secs <= 10.0, c.name + fmt(": %.2f s", secs));
  }
  r.detail = std::to_string(cases.size()) + " instances, max violation " +
             fmt("%.2g", worst_violation) + ", max objective rel err " + fmt("%.2g", worst_obj) +
             ", slowest " + slowest_name + fmt(" %.2f s", slowest);
  return r;
}

// ---------------------------------------------------------------- 2

Outcome relaxation_fidelity() {
  Outcome r;
  const CaseBundle base = load_case(std::string(HSC_DATA_DIR) + "/northeast-mini");
  CaseBundle relaxed = base, integer = base;
  relaxed.scenario.truck_mode = TruckMode::kRelaxed;
  integer.scenario.truck_mode = TruckMode::kInteger;

  const Solution lp = solve_lp(build(relaxed.network, relaxed.catalog, relaxed.grid, relaxed.scenario));
  r.require(lp.status == SolveStatus::kOptimal, "relaxed solve not optimal");
  if (!r.pass) return r;

  const auto start = Clock::now();
  SolverOptions opts;
  opts.gap_tol = 1e-3;
  opts.time_limit_seconds = 60.0;
  const MilpInstance inst = build(integer.network, integer.catalog, integer.grid, integer.scenario);
  const Solution ip = solve_milp(inst, opts);
  const double secs = seconds_since(start);
  r.require(ip.has_values(), "integer run found no incumbent");
  if (!ip.has_values()) return r;

  const AuditReport rl = audit(lp, relaxed.network, relaxed.catalog, relaxed.grid, relaxed.scenario);
  const AuditReport ri = audit(ip, integer.network, integer.catalog, integer.grid, integer.scenario);
  r.require(rl.pass() && ri.pass(), "audit failed");

  const double gap = std::abs(ip.objective - lp.objective) / std::abs(ip.objective);
  r.require(gap <= 5e-3, fmt("objective gap %.4f%%", 100 * gap));
  r.require(secs <= 60.0, fmt("integer solve %.1f s", secs));

  double worst = 0.0;
  std::string worst_name;
  auto compare = [&](const std::map<std::string, double>& a, const std::map<std::string, double>& b,
                     const std::string& what) {
    for (const auto& [id, va] : a) {
      const auto it = b.find(id);
      const double vb = it == b.end() ? 0.0 : it->second;
      if (std::max(std::abs(va), std::abs(vb)) < 1e-6) continue;
      const double d = rel_diff(va, vb);
      if (d > worst) {
        worst = d;
        worst_name = what + " " + id;
      }
      r.require(d <= 0.01, what + " " + id + fmt(": %.6g vs %.6g", va, vb));
    }
  };
  compare(rl.capacity.generation, ri.capacity.generation, "generation");
  compare(ri.capacity.generation, rl.capacity.generation, "generation");
  compare(rl.capacity.truck_capacity, ri.capacity.truck_capacity, "truck");
  compare(ri.capacity.truck_capacity, rl.capacity.truck_capacity, "truck");

  const auto ul = unit_hydrogen_cost(rl), ui = unit_hydrogen_cost(ri);
  r.detail = fmt("relaxed %.4f $/kg, integer %.4f $/kg", ul.value_or(0), ui.value_or(0)) +
             fmt(", gap %.3f%%, B&B gap %.3f%%", 100 * gap, 100 * ip.stats.gap) +
             fmt(", worst capacity diff %.3f%%", 100 * worst) + " (" + worst_name + ")" +
             fmt(", integer %.1f s", secs) + ", status " + std::string(to_string(ip.status));
  return r;
}

// ---------------------------------------------------------------- 3

CaseBundle anti_correlated_pair() {
  const int steps = 24;
  CaseBundle b;
  Zone a, z;
  a.id = "A";
  a.eligible_generation = {"electrolyzer"};
  z.id = "B";
  z.eligible_generation = {"electrolyzer"};
  z.allow_central_smr = false;
  b.network.zones = {a, z};
  b.network.paths = {{"A", "B", 80.0, 2}, {"B", "A", 80.0, 2}};
  b.catalog = reference_catalog();
  b.catalog.pipelines.clear();
  b.catalog.storage.clear();
  b.catalog.trucks.resize(1);
  b.grid = TimeGrid::uniform(steps);
  b.scenario.demand = ZoneSeries(2, steps, 0.0);
  b.scenario.gas_price = ZoneSeries(2, steps, 9.0);
  b.scenario.electricity_price = ZoneSeries(2, steps, 0.0);
  for (int t = 0; t < steps; ++t) {
    const bool first_half = t < 12;
    b.scenario.electricity_price.at(0, t) = first_half ? 10.0 : 80.0;
    b.scenario.electricity_price.at(1, t) = first_half ? 80.0 : 10.0;
    // Evening refuelling peak at B; A has no demand.
    b.scenario.demand.at(1, t) = (t >= 17 && t < 21) ? 3.0 : 0.6;
  }
  return b;
}

Outcome flexibility_value() {
  Outcome r;
  CaseBundle b = anti_correlated_pair();
  AuditReport rep[2];
  const TruckMode modes[2] = {TruckMode::kRelaxed, TruckMode::kFixedRouteExisting};
  for (int m = 0; m < 2; ++m) {
    b.scenario.truck_mode = modes[m];
    const Solution s = solve_lp(build(b.network, b.catalog, b.grid, b.scenario));
    r.require(s.status == SolveStatus::kOptimal, "solve not optimal");
    if (s.status != SolveStatus::kOptimal) return r;
    rep[m] = audit(s, b.network, b.catalog, b.grid, b.scenario);
    r.require(rep[m].pass(), "audit failed");
  }
  const double ratio = rep[1].costs.total() / rep[0].costs.total();
  r.require(ratio >= 1.02, fmt("existing/relaxed cost %.4f", ratio));
  r.require(rep[1].costs.truck > rep[0].costs.truck,
            fmt("truck capex existing %.6g vs relaxed %.6g", rep[1].costs.truck, rep[0].costs.truck));
  r.detail = fmt("cost existing/relaxed %.3f", ratio) +
             fmt(", truck capex existing/relaxed %.3f", rep[1].costs.truck / rep[0].costs.truck);
  return r;
}

// ---------------------------------------------------------------- 4

Outcome carbon_switching() {
  Outcome r;
  const CaseBundle ne = load_case(std::string(HSC_DATA_DIR) + "/northeast");
  const int steps = 168;
  CaseBundle b;
  Zone z;
  z.id = "z1";
  z.eligible_generation = {"electrolyzer", "smr", "smr_ccs"};
  b.network.zones = {z};
  b.catalog = reference_catalog();
  b.catalog.pipelines.clear();
  b.catalog.trucks.clear();
  b.catalog.storage.clear();
  b.grid = TimeGrid::uniform(steps);
  b.scenario.demand = ZoneSeries(1, steps, 10.0);
  b.scenario.gas_price = ZoneSeries(1, steps, 9.0);
  b.scenario.electricity_price = ZoneSeries(1, steps, 0.0);
  for (int t = 0; t < steps; ++t) {
    b.scenario.electricity_price.at(0, t) = ne.scenario.electricity_price.at(0, t);
  }
  b.scenario.electrolyzer_capex_override =
      electrolyzer_unit_capex_from_kw(*b.catalog.find_generation("electrolyzer"), 300.0);

  std::vector<double> smr, elec;
  double threshold = -1.0;
  std::ostringstream shares;
  for (double cp : {0.0, 50.0, 100.0, 200.0}) {
    b.scenario.carbon_price = cp;
    const Solution s = solve_lp(build(b.network, b.catalog, b.grid, b.scenario));
    r.require(s.status == SolveStatus::kOptimal, fmt("carbon %.0f not optimal", cp));
    if (s.status != SolveStatus::kOptimal) return r;
    const AuditReport rep = audit(s, b.network, b.catalog, b.grid, b.scenario);
    r.require(rep.pass(), fmt("carbon %.0f audit failed", cp));
    double total = 0.0;
    for (const auto& [id, v] : rep.generation_output) total += v;
    auto share = [&](const std::string& id) {
      const auto it = rep.generation_output.find(id);
      return it == rep.generation_output.end() ? 0.0 : it->second / total;
    };
    smr.push_back(share("smr"));
    elec.push_back(share("electrolyzer"));
    shares << (cp > 0 ? "; " : "") << fmt("%.0f: smr %.3f", cp, smr.back())
           << fmt(" elec %.3f", elec.back());
    if (cp == 100.0) {
      for (int t = 0; t < steps; ++t) {
        const double out = s.value("gen_out/electrolyzer/z1/" + std::to_string(t));
        if (out > 1e-6) threshold = std::max(threshold, b.scenario.electricity_price.at(0, t));
      }
    }
  }
  for (size_t i = 1; i < smr.size(); ++i) {
    r.require(smr[i] <= smr[i - 1] + 1e-9, "smr share increases");
    r.require(elec[i] >= elec[i - 1] - 1e-9, "electrolyzer share decreases");
  }
  r.require(threshold >= 0.0, "no electrolyzer output at carbon 100");
  r.require(std::abs(threshold - 30.0) <= 10.0,
            fmt("electrolyzer runs up to %.2f $/MWh at carbon 100", threshold));
  r.detail = "shares " + shares.str() + fmt("; highest price with electrolysis %.2f $/MWh", threshold);
  return r;
}

// ---------------------------------------------------------------- 5

// Previous step inside the representative period, wrapping at its start.
int prev_step(const TimeGrid& g, int t) {
  const Period& p = g.periods()[static_cast<size_t>(g.period_of(t))];
  return t == p.first ? p.first + p.length - 1 : t - 1;
}

int shift_step(const TimeGrid& g, int t, int k) {
  const Period& p = g.periods()[static_cast<size_t>(g.period_of(t))];
  const int off = ((t - p.first + k) % p.length + p.length) % p.length;
  return p.first + off;
}

std::string key(const std::string& tag, const std::string& tech, const std::string& site, int t) {
  std::string k = tag + "/" + tech;
  if (!site.empty()) k += "/" + site;
  if (t >= 0) k += "/" + std::to_string(t);
  return k;
}

void check_truck_identities(const CaseBundle& b, const Solution& s, const std::string& name,
                            Outcome& r, double& worst) {
  constexpr double kTol = 1e-6;
  const TimeGrid& g = b.grid;
  const int nt = g.size();
  auto note = [&](double err, const std::string& what) {
    worst = std::max(worst, err);
    r.require(err <= kTol, name + ": " + what + fmt(" off by %.3g", err));
  };
  for (const TruckType& tt : b.catalog.trucks) {
    const std::string& j = tt.id;
    const double fleet = s.value(key("fleet", j, "", -1));
    for (int t = 0; t < nt; ++t) {
      const double full = s.value(key("fleet_full", j, "", t));
      const double empty = s.value(key("fleet_empty", j, "", t));
      note(std::abs(full + empty - fleet), "full + empty = fleet");
      double parked_f = 0.0, parked_e = 0.0, transit_f = 0.0, transit_e = 0.0;
      for (const Zone& z : b.network.zones) {
        parked_f += s.value(key("parked_full", j, z.id, t));
        parked_e += s.value(key("parked_empty", j, z.id, t));
      }
      for (const Path& p : b.network.paths) {
        const std::string site = p.from_zone + ">" + p.to_zone;
        transit_f += s.value(key("transit_full", j, site, t));
        transit_e += s.value(key("transit_empty", j, site, t));
      }
      note(std::abs(full - parked_f - transit_f), "full fleet decomposition");
      note(std::abs(empty - parked_e - transit_e), "empty fleet decomposition");
    }
    for (const Path& p : b.network.paths) {
      const std::string site = p.from_zone + ">" + p.to_zone;
      for (const char* state : {"full", "empty"}) {
        const std::string st = state;
        for (int t = 0; t < nt; ++t) {
          const int pv = prev_step(g, t);
          const double u = s.value(key("transit_" + st, j, site, t));
          const double u_prev = s.value(key("transit_" + st, j, site, pv));
          const double x = s.value(key("depart_" + st, j, site, pv));
          const double y = s.value(key("arrive_" + st, j, site, pv));
          note(std::abs(u - u_prev - x + y), "transit recursion " + st);
          // No arrival earlier than the delay after departure: whatever left
          // in the last d steps, and whatever arrives in the next d steps,
          // is on the road now.
          double left = 0.0, coming = 0.0;
          for (int k = 1; k <= p.travel_delay; ++k) {
            left += s.value(key("depart_" + st, j, site, shift_step(g, t, -k)));
          }
          for (int k = 0; k < p.travel_delay; ++k) {
            coming += s.value(key("arrive_" + st, j, site, shift_step(g, t, k)));
          }
          note(std::max(0.0, left - u), "departure window " + st);
          note(std::max(0.0, coming - u), "arrival window " + st);
        }
      }
    }
    for (const Zone& z : b.network.zones) {
      for (int t = 0; t < nt; ++t) {
        const int pv = prev_step(g, t);
        const double cha = s.value(key("charged", j, z.id, t));
        const double dis = s.value(key("discharged", j, z.id, t));
        double in_f = 0.0, in_e = 0.0, out_f = 0.0, out_e = 0.0;
        for (const Path& p : b.network.paths) {
          const std::string site = p.from_zone + ">" + p.to_zone;
          if (p.to_zone == z.id) {
            in_f += s.value(key("arrive_full", j, site, pv));
            in_e += s.value(key("arrive_empty", j, site, pv));
          }
          if (p.from_zone == z.id) {
            out_f += s.value(key("depart_full", j, site, pv));
            out_e += s.value(key("depart_empty", j, site, pv));
          }
        }
        const double nf = s.value(key("parked_full", j, z.id, t));
        const double nf_prev = s.value(key("parked_full", j, z.id, pv));
        const double ne = s.value(key("parked_empty", j, z.id, t));
        const double ne_prev = s.value(key("parked_empty", j, z.id, pv));
        note(std::abs(nf - nf_prev - cha + dis - in_f + out_f), "full inventory recursion");
        note(std::abs(ne - ne_prev + cha - dis - in_e + out_e), "empty inventory recursion");
      }
    }
  }
  // Boil-off: each gas-truck discharge delivers 0.97 * 0.3 t; charging
  // takes a full 0.3 t. Random cases have no pipelines, so trucks are the
  // only transport.
  for (const Zone& z : b.network.zones) {
    for (int t = 0; t < nt; ++t) {
      double expect = 0.0;
      for (const TruckType& tt : b.catalog.trucks) {
        const double dis = s.value(key("discharged", tt.id, z.id, t));
        const double cha = s.value(key("charged", tt.id, z.id, t));
        if (tt.id == "gas_truck") {
          expect += 0.291 * dis - 0.3 * cha;
        } else {
          expect += (1.0 - tt.boiloff_frac) * tt.cargo_capacity * dis - tt.cargo_capacity * cha;
        }
      }
      note(std::abs(s.value(key("transport", z.id, "", t)) - expect), "boil-off accounting");
    }
  }
  for (size_t i = 0; i < s.values().size(); ++i) {
    const std::string& k = s.keys()[i];
    if (k.rfind("lost_load/", 0) == 0 || k.rfind("transport/", 0) == 0) continue;
    note(std::max(0.0, -s.values()[i]), "nonnegativity of " + k);
  }
}

Outcome truck_invariants() {
  Outcome r;
  const TruckType* gas = nullptr;
  const TechnologyCatalog cat = reference_catalog();
  for (const TruckType& tt : cat.trucks) {
    if (tt.id == "gas_truck") gas = &tt;
  }
  r.require(gas && gas->cargo_capacity == 0.3 && gas->boiloff_frac == 0.03,
            "gas truck catalog entry is not 0.3 t with 3% boil-off");
  double worst = 0.0;
  int integer_cases = 0, moved = 0;
  for (std::uint64_t seed = 1001; seed <= 1050; ++seed) {
    const TruckMode mode = seed % 5 == 0 ? TruckMode::kInteger : TruckMode::kRelaxed;
    integer_cases += mode == TruckMode::kInteger;
    const CaseBundle b = random_truck_case(seed, mode);
    const std::string name = "seed " + std::to_string(seed);
    SolverOptions opts;
    opts.time_limit_seconds = 10.0;
    const Solution s = solve_instance(build(b.network, b.catalog, b.grid, b.scenario), opts);
    r.require(s.has_values(), name + ": no solution");
    if (!s.has_values()) continue;
    const auto diags = truck_state_audit(s, b.network, b.catalog, b.grid, b.scenario);
    r.require(diags.empty(), name + ": " + (diags.empty() ? "" : diags.front()));
    check_truck_identities(b, s, name, r, worst);
    for (size_t i = 0; i < s.values().size(); ++i) {
      if (s.keys()[i].rfind("discharged/", 0) == 0 && s.values()[i] > 1e-6) {
        ++moved;
        break;
      }
    }
  }
  r.require(moved >= 25, "fewer than half the cases move any hydrogen by truck");
  r.detail = "50 cases (" + std::to_string(integer_cases) + " integer), " +
             std::to_string(moved) + " with truck deliveries, worst identity error " +
             fmt("%.2g", worst);
  return r;
}

// ---------------------------------------------------------------- 6

Outcome solver_suite() {
  Outcome r;
  int hand = 0, enumerated = 0, trips = 0;
  for (const Fixture& f : hand_lps()) {
    const Solution s = solve_lp(f.instance);
    r.require(s.status == SolveStatus::kOptimal, f.name + ": not optimal");
    if (s.status != SolveStatus::kOptimal) continue;
    r.require(std::abs(s.objective - *f.objective) <= 1e-12 * std::max(1.0, std::abs(*f.objective)),
              f.name + ": objective");
    for (int j = 0; j < f.instance.num_cols(); ++j) {
      r.require(std::abs(s.values()[static_cast<size_t>(j)] - f.point[static_cast<size_t>(j)]) <= 1e-9,
                f.name + ": vertex");
    }
    ++hand;
  }
  for (const Fixture& f : milp_fixtures(120, 4321)) {
    int ints = 0;
    for (int j = 0; j < f.instance.num_cols(); ++j) ints += f.instance.vars[j].integer;
    if (ints > 6) continue;
    const auto oracle = exhaustive_milp(f.instance);
    const Solution s = solve_milp(f.instance);
    if (!oracle) {
      r.require(s.status == SolveStatus::kInfeasible, f.name + ": should be infeasible");
    } else {
      r.require(s.status == SolveStatus::kOptimal, f.name + ": not optimal");
      r.require(std::abs(s.objective - oracle->objective) <= 1e-6 * (1.0 + std::abs(oracle->objective)),
                f.name + ": differs from enumeration");
    }
    ++enumerated;
  }
  for (const Fixture& f : all_fixtures()) {
    std::stringstream ss;
    const MpsNameMap names = write_mps(f.instance, ss);
    const MilpInstance back = read_mps(ss, &names);
    const std::string diff = instance_difference(f.instance, back);
    r.require(diff.empty(), f.name + ": MPS round trip " + diff);
    ++trips;
  }
  r.detail = std::to_string(hand) + " hand LPs, " + std::to_string(enumerated) +
             " MILPs vs enumeration, " + std::to_string(trips) + " MPS round trips";
  return r;
}

// ---------------------------------------------------------------- 7

CaseBundle mesh(int zones, int steps, int truck_types) {
  TruckCaseOptions o;
  o.steps = steps;
  o.delay = 1;
  o.gas_trucks_only = truck_types == 1;
  CaseBundle b = two_zone_trucks(o);
  b.network.zones.resize(1);
  b.network.paths.clear();
  for (int z = 1; z < zones; ++z) {
    Zone zone;
    zone.id = "Z" + std::to_string(z);
    zone.allow_central_smr = false;
    b.network.zones.push_back(zone);
  }
  for (int a = 0; a < zones; ++a) {
    for (int c = 0; c < zones; ++c) {
      if (a != c) b.network.paths.push_back({b.network.zones[a].id, b.network.zones[c].id, 50.0, 1});
    }
  }
  b.scenario.demand = ZoneSeries(zones, steps, 1.0);
  b.scenario.gas_price = ZoneSeries(zones, steps, 3.0);
  b.scenario.electricity_price = ZoneSeries(zones, steps, 40.0);
  return b;
}

Outcome structural_counts() {
  Outcome r;
  int instances = 0;
  for (int zones : {1, 2, 3, 4}) {
    for (int steps : {2, 5, 12, 24}) {
      for (int types : {1, 2}) {
        const CaseBundle b = mesh(zones, steps, types);
        const MilpInstance inst = build(b.network, b.catalog, b.grid, b.scenario);
        const std::string at = "Z=" + std::to_string(zones) + " T=" + std::to_string(steps) +
                               " J=" + std::to_string(types) + ": ";
        const int zt = zones * steps, jt = types * steps;
        r.require(inst.count_rows(RowFamily::kBalance) == zt, at + "balance");
        r.require(inst.count_rows(RowFamily::kTruckFleet) == jt, at + "fleet");
        r.require(inst.count_rows(RowFamily::kTransmission) == zt, at + "transmission");
        r.require(inst.count_rows(RowFamily::kCompression) == zt, at + "compression");
        r.require(inst.count_rows(RowFamily::kTruckDecomposition) == 2 * jt, at + "decomposition");
        r.require(inst.count_rows(RowFamily::kTruckInventory) == 2 * jt * zones, at + "inventory");
        ++instances;
      }
    }
  }
  r.detail = std::to_string(instances) +
             " instances: balance Z*T, fleet J*T, transmission Z*T, compression Z*T, "
             "decomposition 2*J*T, inventory 2*J*Z*T";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle agreement", oracle_agreement},
      {2, "relaxation fidelity", relaxation_fidelity},
      {3, "flexibility value", flexibility_value},
      {4, "carbon-price switching", carbon_switching},
      {5, "truck network invariants", truck_invariants},
      {6, "solver unit suite", solver_suite},
      {7, "structural counts", structural_counts},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s [%.1f s] %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                seconds_since(start), o.detail.c_str());
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
