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

#include "hsc/lp/builder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <utility>

namespace hsc {
namespace {

using Terms = std::vector<std::pair<int, double>>;

std::string step_name(const std::string& base, int t) {
  return base + "/" + std::to_string(t);
}

int hours_to_steps(int hours, double step_hours) {
  if (hours <= 0) return 0;
  return static_cast<int>(std::ceil(hours / step_hours - 1e-9));
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%a;", v);
  return buf;
}

std::string scenario_hash(const Scenario& s) {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(h, s.name + ";" + std::string(to_string(s.truck_mode)) + ";");
  for (double v : {s.carbon_price, s.lost_load_cost, s.discount_rate,
                   s.pipeline_cost_factor,
                   s.electrolyzer_capex_override.value_or(-1.0)}) {
    h = fnv1a(h, hex_double(v));
  }
  for (const ZoneSeries* series : {&s.electricity_price, &s.gas_price, &s.demand}) {
    for (double v : series->raw()) h = fnv1a(h, hex_double(v));
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double series_at(const ZoneSeries& s, int z, int t) {
  return s.empty() ? 0.0 : s.at(z, t);
}

}  // namespace

std::string describe(const BuildOptions& options) {
  std::ostringstream os;
  os << "existing_convention="
     << (options.existing_convention == ExistingFleetConvention::kRoundTrip
             ? "round_trip"
             : "one_way")
     << ";existing_integer_fleets=" << (options.existing_integer_fleets ? 1 : 0)
     << ";cap_multiplier=" << options.cap_multiplier;
  return os.str();
}

BuildContext::BuildContext(const Network& network_in,
                           const TechnologyCatalog& catalog_in,
                           const TimeGrid& grid_in, const Scenario& scenario_in,
                           BuildOptions options_in)
    : network(network_in), catalog(catalog_in), grid(grid_in),
      scenario(scenario_in), options(options_in) {
  for (const Path& p : network.paths) {
    const int a = network.zone_index(p.from_zone);
    const int b = network.zone_index(p.to_zone);
    if (a < 0 || b < 0) throw BuildError("path references unknown zone");
    path_from_.push_back(a);
    path_to_.push_back(b);
  }
  instance.scenario_hash = scenario_hash(scenario);
  instance.build_options = describe(options);
  declare_variables();
}

bool BuildContext::flexible_trucks() const {
  return scenario.truck_mode != TruckMode::kFixedRouteExisting;
}

int BuildContext::path_index(int from, int to) const {
  for (size_t p = 0; p < path_from_.size(); ++p) {
    if (path_from_[p] == from && path_to_[p] == to) return static_cast<int>(p);
  }
  return -1;
}

int BuildContext::lagged_step(int t, int lag) const {
  const int first = grid.period_first(t);
  const int len = grid.period_last(t) - first + 1;
  const int off = ((t - first + lag) % len + len) % len;
  return first + off;
}

void BuildContext::declare_variables() {
  auto& vars = instance.vars;
  const int nz = zones();
  const int nt = steps();
  const double r = scenario.discount_rate;
  const double cm = options.cap_multiplier;

  double peak = 0.0;
  double annual = 0.0;
  for (int z = 0; z < nz; ++z) {
    if (scenario.demand.empty()) break;
    peak += scenario.demand.zone_max(z);
    for (int t = 0; t < nt; ++t) annual += rate_weight(t) * scenario.demand.at(z, t);
  }

  // Zone-level operating variables.
  transport.assign(nz, std::vector<int>(nt));
  lost.assign(nz, std::vector<int>(nt));
  comp_power.assign(nz, std::vector<int>(nt));
  for (int z = 0; z < nz; ++z) {
    const std::string& zid = network.zones[z].id;
    for (int t = 0; t < nt; ++t) {
      const double w = rate_weight(t);
      transport[z][t] = vars.add(make_key(VarKind::kTransport, "", zid, t), -kInf, kInf, 0.0);
      lost[z][t] = vars.add(make_key(VarKind::kLostLoad, "", zid, t), 0.0,
                            series_at(scenario.demand, z, t),
                            w * scenario.lost_load_cost);
      comp_power[z][t] = vars.add(make_key(VarKind::kCompPower, "", zid, t), 0.0, kInf,
                                  w * series_at(scenario.electricity_price, z, t));
    }
  }

  // Generation.
  for (int z = 0; z < nz; ++z) {
    const Zone& zone = network.zones[z];
    for (int k = 0; k < static_cast<int>(catalog.generation.size()); ++k) {
      const GenerationTech& g = catalog.generation[k];
      if (!generation_allowed(zone, g)) continue;
      GenSlot s;
      s.tech = k;
      s.zone = z;
      const double rated = g.max_output_frac * g.unit_capacity;
      const double cap = rated > 0.0 ? cm * peak / rated : 0.0;
      s.units = vars.add(make_key(VarKind::kGenUnits, g.id, zone.id), 0.0, cap,
                         annuity_factor(g.lifetime_years, r) *
                             effective_unit_capex(g, scenario));
      for (int t = 0; t < nt; ++t) {
        const double w = rate_weight(t);
        const double c_out =
            w * (series_at(scenario.electricity_price, z, t) * g.electricity_rate +
                 scenario.carbon_price * g.emission_rate);
        s.output.push_back(vars.add(make_key(VarKind::kGenOutput, g.id, zone.id, t), 0.0,
                                    kInf, c_out));
        s.online.push_back(vars.add(make_key(VarKind::kGenOnline, g.id, zone.id, t), 0.0,
                                    kInf, 0.0));
        s.startup.push_back(vars.add(make_key(VarKind::kGenStartup, g.id, zone.id, t), 0.0,
                                     kInf, 0.0));
        s.shutdown.push_back(vars.add(make_key(VarKind::kGenShutdown, g.id, zone.id, t),
                                      0.0, kInf, 0.0));
        if (g.gas_rate > 0.0) {
          s.gas.push_back(vars.add(make_key(VarKind::kGasUse, g.id, zone.id, t), 0.0, kInf,
                                   w * series_at(scenario.gas_price, z, t)));
        }
      }
      gen.push_back(std::move(s));
    }
  }

  // Storage.
  for (int z = 0; z < nz; ++z) {
    const Zone& zone = network.zones[z];
    for (int si = 0; si < static_cast<int>(catalog.storage.size()); ++si) {
      const StorageTech& st = catalog.storage[si];
      if (!storage_allowed(zone, st)) continue;
      StorageSlot s;
      s.tech = si;
      s.zone = z;
      const double delta = annuity_factor(st.lifetime_years, r);
      s.capacity = vars.add(make_key(VarKind::kStoCapacity, st.id, zone.id), 0.0, annual,
                            delta * st.capex_per_tonne);
      s.rate = vars.add(make_key(VarKind::kStoRate, st.id, zone.id), 0.0, cm * peak,
                        delta * st.compressor_capex);
      for (int t = 0; t < nt; ++t) {
        s.charge.push_back(vars.add(make_key(VarKind::kStoCharge, st.id, zone.id, t), 0.0,
                                    kInf, 0.0));
        s.discharge.push_back(vars.add(make_key(VarKind::kStoDischarge, st.id, zone.id, t),
                                       0.0, kInf, 0.0));
        s.level.push_back(vars.add(make_key(VarKind::kStoLevel, st.id, zone.id, t), 0.0,
                                   kInf, 0.0));
      }
      storage.push_back(std::move(s));
    }
  }

  // Pipelines, one slot per unordered connected pair and line type.
  for (int p = 0; p < static_cast<int>(network.paths.size()); ++p) {
    const int a = path_from_[p];
    const int b = path_to_[p];
    if (a > b) continue;
    const int back = path_index(b, a);
    if (back < 0) continue;
    for (int i = 0; i < static_cast<int>(catalog.pipelines.size()); ++i) {
      const PipelineType& pt = catalog.pipelines[i];
      PipeSlot s;
      s.type = i;
      s.zone_a = a;
      s.zone_b = b;
      s.path_ab = p;
      s.path_ba = back;
      s.distance = network.paths[p].distance;
      const double f = scenario.pipeline_cost_factor;
      const double delta = annuity_factor(pt.lifetime_years, r);
      const double cost =
          delta * f * (pt.capex_per_mile * s.distance +
                       pt.comp_capex_per_mile * s.distance + pt.comp_capex_fixed);
      const std::string pair = path_site(network.zones[a].id, network.zones[b].id);
      const std::string ab = pair;
      const std::string ba = path_site(network.zones[b].id, network.zones[a].id);
      s.lines = vars.add(make_key(VarKind::kPipeLines, pt.id, pair), 0.0,
                         pt.max_flow > 0.0 ? cm * peak / pt.max_flow : 0.0, cost);
      for (int t = 0; t < nt; ++t) {
        const bool last = t == grid.period_last(t);
        s.linepack.push_back(vars.add(make_key(VarKind::kLinepack, pt.id, pair, t), 0.0,
                                      last ? 0.0 : kInf, 0.0));
        s.in[0].push_back(vars.add(make_key(VarKind::kPipeIn, pt.id, ab, t), 0.0, kInf, 0.0));
        s.out[0].push_back(vars.add(make_key(VarKind::kPipeOut, pt.id, ab, t), 0.0, kInf, 0.0));
        s.in[1].push_back(vars.add(make_key(VarKind::kPipeIn, pt.id, ba, t), 0.0, kInf, 0.0));
        s.out[1].push_back(vars.add(make_key(VarKind::kPipeOut, pt.id, ba, t), 0.0, kInf, 0.0));
      }
      pipes.push_back(std::move(s));
    }
  }

  // Trucks: station capacity in every mode, then either the flexible
  // network or the fixed-route baseline.
  const int np = static_cast<int>(network.paths.size());
  station.assign(catalog.trucks.size(), std::vector<int>(nz, -1));
  for (int j = 0; j < static_cast<int>(catalog.trucks.size()); ++j) {
    const TruckType& tt = catalog.trucks[j];
    const double delta = annuity_factor(tt.lifetime_years, r);
    for (int z = 0; z < nz; ++z) {
      station[j][z] = vars.add(make_key(VarKind::kStationCap, tt.id, network.zones[z].id),
                               0.0, cm * peak, delta * tt.station_capex);
    }
    const double fleet_cap = tt.cargo_capacity > 0.0 ? annual / tt.cargo_capacity : 0.0;
    const double trip_cost = tt.opex_per_mile + scenario.carbon_price * tt.emission_rate *
                                                    tt.cargo_capacity;

    if (!flexible_trucks()) {
      const bool integer = options.existing_integer_fleets;
      for (int p = 0; p < np; ++p) {
        const Path& path = network.paths[p];
        const std::string site = path_site(path.from_zone, path.to_zone);
        RouteSlot rs;
        rs.type = j;
        rs.path = p;
        const int d = path.travel_delay;
        if (options.existing_convention == ExistingFleetConvention::kRoundTrip) {
          rs.cycle_steps = 2 * d + 2;
          rs.lag_steps = d + 1;
        } else {
          rs.cycle_steps = std::max(1, d);
          rs.lag_steps = 0;
        }
        rs.fleet = vars.add(make_key(VarKind::kRouteFleet, tt.id, site), 0.0,
                            std::floor(fleet_cap), delta * tt.unit_capex, integer);
        vars[rs.fleet].priority = 1;
        for (int t = 0; t < nt; ++t) {
          // A load is one full arrival plus one empty return.
          rs.loads.push_back(vars.add(make_key(VarKind::kRouteLoads, tt.id, site, t), 0.0,
                                      kInf,
                                      grid.weight(t) * 2.0 * trip_cost * path.distance,
                                      integer));
        }
        routes.push_back(std::move(rs));
      }
      continue;
    }

    const bool integer = scenario.truck_mode == TruckMode::kInteger;
    TruckSlot s;
    s.type = j;
    s.station = station[j];
    s.fleet = vars.add(make_key(VarKind::kFleet, tt.id, ""), 0.0, std::floor(fleet_cap),
                       delta * tt.unit_capex, integer);
    vars[s.fleet].priority = 1;
    auto add_count = [&](VarKind kind, const std::string& site, int t, double cost) {
      return vars.add(make_key(kind, tt.id, site, t), 0.0, kInf, cost, integer);
    };
    for (int t = 0; t < nt; ++t) {
      s.full.push_back(add_count(VarKind::kFleetFull, "", t, 0.0));
      s.empty.push_back(add_count(VarKind::kFleetEmpty, "", t, 0.0));
    }
    auto zone_grid = [&](VarKind kind) {
      std::vector<std::vector<int>> out(nz);
      for (int z = 0; z < nz; ++z) {
        for (int t = 0; t < nt; ++t) {
          out[z].push_back(add_count(kind, network.zones[z].id, t, 0.0));
        }
      }
      return out;
    };
    s.parked_full = zone_grid(VarKind::kParkedFull);
    s.parked_empty = zone_grid(VarKind::kParkedEmpty);
    s.charged = zone_grid(VarKind::kCharged);
    s.discharged = zone_grid(VarKind::kDischarged);
    auto path_grid = [&](VarKind kind, bool arrival) {
      std::vector<std::vector<int>> out(np);
      for (int p = 0; p < np; ++p) {
        const Path& path = network.paths[p];
        const std::string site = path_site(path.from_zone, path.to_zone);
        for (int t = 0; t < nt; ++t) {
          const double cost = arrival ? grid.weight(t) * trip_cost * path.distance : 0.0;
          out[p].push_back(add_count(kind, site, t, cost));
        }
      }
      return out;
    };
    s.transit_full = path_grid(VarKind::kTransitFull, false);
    s.transit_empty = path_grid(VarKind::kTransitEmpty, false);
    s.depart_full = path_grid(VarKind::kDepartFull, false);
    s.depart_empty = path_grid(VarKind::kDepartEmpty, false);
    s.arrive_full = path_grid(VarKind::kArriveFull, true);
    s.arrive_empty = path_grid(VarKind::kArriveEmpty, true);
    trucks.push_back(std::move(s));
  }
}

int emit_balance(BuildContext& ctx) {
  int added = 0;
  for (int z = 0; z < ctx.zones(); ++z) {
    for (int t = 0; t < ctx.steps(); ++t) {
      Terms terms;
      for (const GenSlot& g : ctx.gen) {
        if (g.zone == z) terms.emplace_back(g.output[t], 1.0);
      }
      for (const StorageSlot& s : ctx.storage) {
        if (s.zone != z) continue;
        terms.emplace_back(s.discharge[t], 1.0);
        terms.emplace_back(s.charge[t], -1.0);
      }
      terms.emplace_back(ctx.transport[z][t], 1.0);
      terms.emplace_back(ctx.lost[z][t], 1.0);
      ctx.instance.add_row(step_name("bal/" + ctx.network.zones[z].id, t),
                           RowFamily::kBalance, RowSense::kEqual,
                           series_at(ctx.scenario.demand, z, t), terms);
      ++added;
    }
  }
  return added;
}

int emit_production(BuildContext& ctx) {
  int added = 0;
  auto& inst = ctx.instance;
  for (const GenSlot& s : ctx.gen) {
    const GenerationTech& g = ctx.catalog.generation[s.tech];
    const std::string base = g.id + "/" + ctx.network.zones[s.zone].id;
    const int up_steps = hours_to_steps(g.min_up_hours, ctx.grid.step_hours());
    const int down_steps = hours_to_steps(g.min_down_hours, ctx.grid.step_hours());
    for (int t = 0; t < ctx.steps(); ++t) {
      const int prev = ctx.grid.cyclic_prev(t);
      const int first = ctx.grid.period_first(t);
      inst.add_row(step_name("gen_max/" + base, t), RowFamily::kProduction,
                   RowSense::kLessEqual, 0.0,
                   {{s.output[t], 1.0},
                    {s.online[t], -g.max_output_frac * g.unit_capacity}});
      ++added;
      if (g.min_output_frac > 0.0) {
        inst.add_row(step_name("gen_min/" + base, t), RowFamily::kProduction,
                     RowSense::kGreaterEqual, 0.0,
                     {{s.output[t], 1.0},
                      {s.online[t], -g.min_output_frac * g.unit_capacity}});
        ++added;
      }
      inst.add_row(step_name("gen_online/" + base, t), RowFamily::kProduction,
                   RowSense::kLessEqual, 0.0, {{s.online[t], 1.0}, {s.units, -1.0}});
      Terms link{{s.online[t], 1.0}, {s.startup[t], -1.0}, {s.shutdown[t], 1.0}};
      if (prev != t) link.emplace_back(s.online[prev], -1.0);
      inst.add_row(step_name("gen_switch/" + base, t), RowFamily::kProduction,
                   RowSense::kEqual, 0.0, link);
      added += 2;
      if (up_steps > 0) {
        Terms w{{s.online[t], 1.0}};
        for (int e = std::max(first, t - up_steps); e <= t; ++e) {
          w.emplace_back(s.startup[e], -1.0);
        }
        inst.add_row(step_name("gen_minup/" + base, t), RowFamily::kProduction,
                     RowSense::kGreaterEqual, 0.0, w);
        ++added;
      }
      if (down_steps > 0) {
        Terms w{{s.units, 1.0}, {s.online[t], -1.0}};
        for (int e = std::max(first, t - down_steps); e <= t; ++e) {
          w.emplace_back(s.shutdown[e], -1.0);
        }
        inst.add_row(step_name("gen_mindown/" + base, t), RowFamily::kProduction,
                     RowSense::kGreaterEqual, 0.0, w);
        ++added;
      }
      if (!s.gas.empty()) {
        inst.add_row(step_name("fuel/" + base, t), RowFamily::kFuel, RowSense::kEqual, 0.0,
                     {{s.gas[t], 1.0}, {s.output[t], -g.gas_rate}});
        ++added;
      }
    }
  }
  return added;
}

int emit_storage(BuildContext& ctx) {
  int added = 0;
  auto& inst = ctx.instance;
  const double dt = ctx.grid.step_hours();
  for (const StorageSlot& s : ctx.storage) {
    const StorageTech& st = ctx.catalog.storage[s.tech];
    const std::string base = st.id + "/" + ctx.network.zones[s.zone].id;
    for (int t = 0; t < ctx.steps(); ++t) {
      const int prev = ctx.grid.cyclic_prev(t);
      Terms soc{{s.level[t], 1.0},
                {s.charge[t], -dt * st.charge_efficiency},
                {s.discharge[t], dt / st.charge_efficiency}};
      if (prev != t) soc.emplace_back(s.level[prev], -1.0);
      inst.add_row(step_name("sto_soc/" + base, t), RowFamily::kStorage, RowSense::kEqual,
                   0.0, soc);
      inst.add_row(step_name("sto_max/" + base, t), RowFamily::kStorage,
                   RowSense::kLessEqual, 0.0, {{s.level[t], 1.0}, {s.capacity, -1.0}});
      inst.add_row(step_name("sto_rate/" + base, t), RowFamily::kStorage,
                   RowSense::kLessEqual, 0.0, {{s.charge[t], 1.0}, {s.rate, -1.0}});
      added += 3;
      if (st.min_soc_frac > 0.0) {
        inst.add_row(step_name("sto_min/" + base, t), RowFamily::kStorage,
                     RowSense::kGreaterEqual, 0.0,
                     {{s.level[t], 1.0}, {s.capacity, -st.min_soc_frac}});
        ++added;
      }
    }
  }
  return added;
}

int emit_pipeline(BuildContext& ctx) {
  int added = 0;
  auto& inst = ctx.instance;
  const double dt = ctx.grid.step_hours();
  for (const PipeSlot& s : ctx.pipes) {
    const PipelineType& pt = ctx.catalog.pipelines[s.type];
    const std::string base = pt.id + "/" + ctx.network.zones[s.zone_a].id + ">" +
                             ctx.network.zones[s.zone_b].id;
    const double line_pack = pt.linepack_per_mile * s.distance;
    for (int t = 0; t < ctx.steps(); ++t) {
      for (int e = 0; e < 2; ++e) {
        const std::string end = e == 0 ? "a" : "b";
        inst.add_row(step_name("pip_in_" + end + "/" + base, t), RowFamily::kPipeline,
                     RowSense::kLessEqual, 0.0,
                     {{s.in[e][t], 1.0}, {s.lines, -pt.max_flow}});
        inst.add_row(step_name("pip_out_" + end + "/" + base, t), RowFamily::kPipeline,
                     RowSense::kLessEqual, 0.0,
                     {{s.out[e][t], 1.0}, {s.lines, -pt.max_flow}});
      }
      // Linepack gains what is drawn at either end and loses what is
      // delivered; it starts every period empty.
      Terms lp{{s.linepack[t], 1.0}};
      for (int e = 0; e < 2; ++e) {
        lp.emplace_back(s.in[e][t], dt);
        lp.emplace_back(s.out[e][t], -dt);
      }
      if (!ctx.grid.is_period_start(t)) lp.emplace_back(s.linepack[t - 1], -1.0);
      inst.add_row(step_name("pip_pack/" + base, t), RowFamily::kPipeline, RowSense::kEqual,
                   0.0, lp);
      inst.add_row(step_name("pip_pack_max/" + base, t), RowFamily::kPipeline,
                   RowSense::kLessEqual, 0.0,
                   {{s.linepack[t], 1.0}, {s.lines, -line_pack}});
      added += 6;
      if (pt.min_linepack_frac > 0.0) {
        inst.add_row(step_name("pip_pack_min/" + base, t), RowFamily::kPipeline,
                     RowSense::kGreaterEqual, 0.0,
                     {{s.linepack[t], 1.0}, {s.lines, -pt.min_linepack_frac * line_pack}});
        ++added;
      }
    }
  }
  return added;
}

int emit_trucks(BuildContext& ctx) {
  if (!ctx.flexible_trucks()) {
    throw BuildError("flexible truck rows requested in fixed-route mode");
  }
  int added = 0;
  auto& inst = ctx.instance;
  const int nz = ctx.zones();
  const int np = static_cast<int>(ctx.network.paths.size());
  const double dt = ctx.grid.step_hours();
  for (const TruckSlot& s : ctx.trucks) {
    const TruckType& tt = ctx.catalog.trucks[s.type];
    for (int t = 0; t < ctx.steps(); ++t) {
      const int prev = ctx.grid.cyclic_prev(t);
      inst.add_row(step_name("tru_fleet/" + tt.id, t), RowFamily::kTruckFleet,
                   RowSense::kEqual, 0.0,
                   {{s.full[t], 1.0}, {s.empty[t], 1.0}, {s.fleet, -1.0}});
      Terms dec_f{{s.full[t], 1.0}}, dec_e{{s.empty[t], 1.0}};
      for (int p = 0; p < np; ++p) {
        dec_f.emplace_back(s.transit_full[p][t], -1.0);
        dec_e.emplace_back(s.transit_empty[p][t], -1.0);
      }
      for (int z = 0; z < nz; ++z) {
        dec_f.emplace_back(s.parked_full[z][t], -1.0);
        dec_e.emplace_back(s.parked_empty[z][t], -1.0);
      }
      inst.add_row(step_name("tru_dec_full/" + tt.id, t), RowFamily::kTruckDecomposition,
                   RowSense::kEqual, 0.0, dec_f);
      inst.add_row(step_name("tru_dec_empty/" + tt.id, t), RowFamily::kTruckDecomposition,
                   RowSense::kEqual, 0.0, dec_e);
      added += 3;

      for (int z = 0; z < nz; ++z) {
        const std::string site = tt.id + "/" + ctx.network.zones[z].id;
        Terms inv_f{{s.parked_full[z][t], 1.0},
                    {s.charged[z][t], -1.0},
                    {s.discharged[z][t], 1.0}};
        Terms inv_e{{s.parked_empty[z][t], 1.0},
                    {s.charged[z][t], 1.0},
                    {s.discharged[z][t], -1.0}};
        if (prev != t) {
          inv_f.emplace_back(s.parked_full[z][prev], -1.0);
          inv_e.emplace_back(s.parked_empty[z][prev], -1.0);
          for (int p = 0; p < np; ++p) {
            if (ctx.path_from(p) == z) {
              inv_f.emplace_back(s.depart_full[p][prev], 1.0);
              inv_e.emplace_back(s.depart_empty[p][prev], 1.0);
            }
            if (ctx.path_to(p) == z) {
              inv_f.emplace_back(s.arrive_full[p][prev], -1.0);
              inv_e.emplace_back(s.arrive_empty[p][prev], -1.0);
            }
          }
        }
        inst.add_row(step_name("tru_inv_full/" + site, t), RowFamily::kTruckInventory,
                     RowSense::kEqual, 0.0, inv_f);
        inst.add_row(step_name("tru_inv_empty/" + site, t), RowFamily::kTruckInventory,
                     RowSense::kEqual, 0.0, inv_e);
        inst.add_row(step_name("tru_station/" + site, t), RowFamily::kTruckStation,
                     RowSense::kLessEqual, 0.0,
                     {{s.charged[z][t], tt.cargo_capacity / dt}, {s.station[z], -1.0}});
        added += 3;
      }

      for (int p = 0; p < np; ++p) {
        const Path& path = ctx.network.paths[p];
        const std::string site = tt.id + "/" + path.from_zone + ">" + path.to_zone;
        const int d = path.travel_delay;
        const std::vector<int>* u[2] = {&s.transit_full[p], &s.transit_empty[p]};
        const std::vector<int>* x[2] = {&s.depart_full[p], &s.depart_empty[p]};
        const std::vector<int>* y[2] = {&s.arrive_full[p], &s.arrive_empty[p]};
        const char* tag[2] = {"full", "empty"};
        for (int f = 0; f < 2; ++f) {
          Terms tr{{(*u[f])[t], 1.0}};
          if (prev != t) {
            tr.emplace_back((*u[f])[prev], -1.0);
            tr.emplace_back((*x[f])[prev], -1.0);
            tr.emplace_back((*y[f])[prev], 1.0);
          }
          inst.add_row(step_name(std::string("tru_transit_") + tag[f] + "/" + site, t),
                       RowFamily::kTruckTransit, RowSense::kEqual, 0.0, tr);
          ++added;
          // Trucks that left within the last d steps are still on the road,
          // as are those that will arrive within the next d steps. Windows
          // wrap inside the period like the state recursions.
          Terms w1{{(*u[f])[t], 1.0}};
          for (int k = 1; k <= d; ++k) w1.emplace_back((*x[f])[ctx.lagged_step(t, -k)], -1.0);
          if (w1.size() > 1) {
            inst.add_row(step_name(std::string("tru_delay_dep_") + tag[f] + "/" + site, t),
                         RowFamily::kTruckDelay, RowSense::kGreaterEqual, 0.0, w1);
            ++added;
          }
          Terms w2{{(*u[f])[t], 1.0}};
          for (int k = 0; k < d; ++k) w2.emplace_back((*y[f])[ctx.lagged_step(t, k)], -1.0);
          if (w2.size() > 1) {
            inst.add_row(step_name(std::string("tru_delay_arr_") + tag[f] + "/" + site, t),
                         RowFamily::kTruckDelay, RowSense::kGreaterEqual, 0.0, w2);
            ++added;
          }
        }
      }
    }
  }
  return added;
}

int emit_existing_mode(BuildContext& ctx) {
  if (ctx.flexible_trucks()) {
    throw BuildError("fixed-route rows requested with truck_mode " +
                     std::string(to_string(ctx.scenario.truck_mode)));
  }
  int added = 0;
  auto& inst = ctx.instance;
  const double dt = ctx.grid.step_hours();
  for (const RouteSlot& rs : ctx.routes) {
    const TruckType& tt = ctx.catalog.trucks[rs.type];
    const Path& path = ctx.network.paths[rs.path];
    const std::string site = tt.id + "/" + path.from_zone + ">" + path.to_zone;
    for (int t = 0; t < ctx.steps(); ++t) {
      inst.add_row(step_name("route_cap/" + site, t), RowFamily::kExisting,
                   RowSense::kLessEqual, 0.0,
                   {{rs.loads[t], static_cast<double>(rs.cycle_steps)}, {rs.fleet, -1.0}});
      ++added;
    }
  }
  for (int j = 0; j < static_cast<int>(ctx.catalog.trucks.size()); ++j) {
    const TruckType& tt = ctx.catalog.trucks[j];
    for (int z = 0; z < ctx.zones(); ++z) {
      for (int t = 0; t < ctx.steps(); ++t) {
        Terms terms{{ctx.station[j][z], -1.0}};
        for (const RouteSlot& rs : ctx.routes) {
          if (rs.type == j && ctx.path_from(rs.path) == z) {
            terms.emplace_back(rs.loads[t], tt.cargo_capacity / dt);
          }
        }
        inst.add_row(step_name("route_station/" + tt.id + "/" + ctx.network.zones[z].id, t),
                     RowFamily::kExisting, RowSense::kLessEqual, 0.0, terms);
        ++added;
      }
    }
  }
  return added;
}

int emit_transmission_balance(BuildContext& ctx) {
  int added = 0;
  const double dt = ctx.grid.step_hours();
  for (int z = 0; z < ctx.zones(); ++z) {
    for (int t = 0; t < ctx.steps(); ++t) {
      Terms terms{{ctx.transport[z][t], 1.0}};
      for (const PipeSlot& s : ctx.pipes) {
        for (int e = 0; e < 2; ++e) {
          if ((e == 0 ? s.zone_a : s.zone_b) != z) continue;
          terms.emplace_back(s.in[e][t], -1.0);
          terms.emplace_back(s.out[e][t], 1.0);
        }
      }
      for (const TruckSlot& s : ctx.trucks) {
        const TruckType& tt = ctx.catalog.trucks[s.type];
        const double load = tt.cargo_capacity / dt;
        terms.emplace_back(s.discharged[z][t], -(1.0 - tt.boiloff_frac) * load);
        terms.emplace_back(s.charged[z][t], load);
      }
      for (const RouteSlot& rs : ctx.routes) {
        const TruckType& tt = ctx.catalog.trucks[rs.type];
        const double load = tt.cargo_capacity / dt;
        if (ctx.path_from(rs.path) == z) terms.emplace_back(rs.loads[t], load);
        if (ctx.path_to(rs.path) == z) {
          // Delivered now: the load dispatched lag steps earlier.
          terms.emplace_back(rs.loads[ctx.lagged_step(t, -rs.lag_steps)], -(1.0 - tt.boiloff_frac) * load);
        }
      }
      ctx.instance.add_row(step_name("tra/" + ctx.network.zones[z].id, t),
                           RowFamily::kTransmission, RowSense::kEqual, 0.0, terms);
      ++added;
    }
  }
  return added;
}

int emit_compression_power(BuildContext& ctx) {
  int added = 0;
  const double dt = ctx.grid.step_hours();
  for (int z = 0; z < ctx.zones(); ++z) {
    for (int t = 0; t < ctx.steps(); ++t) {
      Terms terms{{ctx.comp_power[z][t], 1.0}};
      for (const PipeSlot& s : ctx.pipes) {
        const PipelineType& pt = ctx.catalog.pipelines[s.type];
        const double rate = pt.comp_elec_per_mile * s.distance + pt.comp_elec_fixed;
        for (int e = 0; e < 2; ++e) {
          if ((e == 0 ? s.zone_a : s.zone_b) != z) continue;
          terms.emplace_back(s.in[e][t], -rate);
          terms.emplace_back(s.out[e][t], -rate);
        }
      }
      for (const TruckSlot& s : ctx.trucks) {
        const TruckType& tt = ctx.catalog.trucks[s.type];
        terms.emplace_back(s.charged[z][t], -tt.station_electricity * tt.cargo_capacity / dt);
      }
      for (const RouteSlot& rs : ctx.routes) {
        if (ctx.path_from(rs.path) != z) continue;
        const TruckType& tt = ctx.catalog.trucks[rs.type];
        terms.emplace_back(rs.loads[t], -tt.station_electricity * tt.cargo_capacity / dt);
      }
      for (const StorageSlot& s : ctx.storage) {
        if (s.zone != z) continue;
        terms.emplace_back(s.charge[t], -ctx.catalog.storage[s.tech].compressor_electricity);
      }
      ctx.instance.add_row(step_name("com/" + ctx.network.zones[z].id, t),
                           RowFamily::kCompression, RowSense::kEqual, 0.0, terms);
      ++added;
    }
  }
  return added;
}

MilpInstance build(const Network& network, const TechnologyCatalog& catalog,
                   const TimeGrid& grid, const Scenario& scenario,
                   const BuildOptions& options) {
  const auto diags = validate_case(network, catalog, grid, scenario);
  if (!diags.empty()) {
    std::string msg = "invalid case:";
    for (const auto& d : diags) msg += " [" + d.code + "] " + d.message + ";";
    throw BuildError(msg);
  }
  for (const Path& p : network.paths) {
    for (const Period& per : grid.periods()) {
      if (p.travel_delay > per.length) {
        throw BuildError("travel delay of path " + p.from_zone + ">" + p.to_zone + " (" +
                         std::to_string(p.travel_delay) + " steps) exceeds period " +
                         per.name + " (" + std::to_string(per.length) + " steps)");
      }
    }
  }
  BuildContext ctx(network, catalog, grid, scenario, options);
  emit_balance(ctx);
  emit_production(ctx);
  emit_storage(ctx);
  emit_pipeline(ctx);
  if (ctx.flexible_trucks()) {
    emit_trucks(ctx);
  } else {
    emit_existing_mode(ctx);
  }
  emit_transmission_balance(ctx);
  emit_compression_power(ctx);
  ctx.instance.check();
  return std::move(ctx.instance);
}

}  // namespace hsc
