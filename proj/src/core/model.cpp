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

#include "hsc/core/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hsc {

int Network::zone_index(std::string_view id) const {
  for (size_t i = 0; i < zones.size(); ++i) {
    if (zones[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int default_travel_delay(double distance_miles, double step_hours,
                         double speed_mph) {
  if (!(distance_miles > 0.0) || !(step_hours > 0.0) || !(speed_mph > 0.0)) {
    throw std::domain_error("travel delay needs positive distance, step and speed");
  }
  const double steps = std::ceil(distance_miles / speed_mph / step_hours - 1e-9);
  return std::max(1, static_cast<int>(steps));
}

std::string_view to_string(GenerationKind kind) {
  switch (kind) {
    case GenerationKind::kElectrolyzer: return "electrolyzer";
    case GenerationKind::kSmr: return "smr";
    case GenerationKind::kSmrCcs: return "smr_ccs";
    case GenerationKind::kOther: return "other";
  }
  return "other";
}

GenerationKind generation_kind_from_string(std::string_view s) {
  if (s == "electrolyzer") return GenerationKind::kElectrolyzer;
  if (s == "smr") return GenerationKind::kSmr;
  if (s == "smr_ccs") return GenerationKind::kSmrCcs;
  if (s == "other") return GenerationKind::kOther;
  throw InputError("unknown generation kind '" + std::string(s) + "'");
}

std::string_view to_string(TruckMode mode) {
  switch (mode) {
    case TruckMode::kRelaxed: return "relaxed";
    case TruckMode::kInteger: return "integer";
    case TruckMode::kFixedRouteExisting: return "existing";
  }
  return "relaxed";
}

TruckMode truck_mode_from_string(std::string_view s) {
  if (s == "relaxed") return TruckMode::kRelaxed;
  if (s == "integer") return TruckMode::kInteger;
  if (s == "existing" || s == "fixed_route_existing") {
    return TruckMode::kFixedRouteExisting;
  }
  throw InputError("unknown truck mode '" + std::string(s) + "'");
}

const GenerationTech* TechnologyCatalog::find_generation(
    std::string_view id) const {
  for (const auto& g : generation) {
    if (g.id == id) return &g;
  }
  return nullptr;
}

const StorageTech* TechnologyCatalog::find_storage(std::string_view id) const {
  for (const auto& s : storage) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

TimeGrid::TimeGrid(double step_hours, std::vector<Period> periods,
                   std::vector<double> weights)
    : step_hours_(step_hours),
      periods_(std::move(periods)),
      weights_(std::move(weights)) {
  if (!(step_hours_ > 0.0)) throw InputError("step_hours must be positive");
  period_of_.assign(weights_.size(), -1);
  int expected_first = 0;
  for (size_t p = 0; p < periods_.size(); ++p) {
    const Period& period = periods_[p];
    if (period.first != expected_first || period.length <= 0) {
      throw InputError("period '" + period.name +
                       "' is not contiguous with its predecessor");
    }
    expected_first += period.length;
    if (static_cast<size_t>(expected_first) > weights_.size()) {
      throw InputError("periods cover more steps than there are weights");
    }
    for (int t = period.first; t < period.first + period.length; ++t) {
      period_of_[static_cast<size_t>(t)] = static_cast<int>(p);
    }
  }
  if (static_cast<size_t>(expected_first) != weights_.size()) {
    throw InputError("periods do not cover every weighted step");
  }
}

TimeGrid TimeGrid::uniform(int length, double step_hours, int periods) {
  if (length <= 0 || periods <= 0) throw InputError("empty time grid");
  std::vector<Period> ps;
  for (int p = 0; p < periods; ++p) {
    ps.push_back(Period{"p" + std::to_string(p), p * length, length});
  }
  const int steps = length * periods;
  const double w = kHoursPerYear / (static_cast<double>(steps) * step_hours);
  return TimeGrid(step_hours, std::move(ps),
                  std::vector<double>(static_cast<size_t>(steps), w));
}

bool TimeGrid::is_period_start(int t) const { return period_first(t) == t; }

int TimeGrid::cyclic_prev(int t) const {
  return is_period_start(t) ? period_last(t) : t - 1;
}

double TimeGrid::represented_hours() const {
  double sum = 0.0;
  for (double w : weights_) sum += w * step_hours_;
  return sum;
}

double ZoneSeries::max() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, v);
  return m;
}

double ZoneSeries::zone_max(int z) const {
  double m = 0.0;
  for (int t = 0; t < steps_; ++t) m = std::max(m, at(z, t));
  return m;
}

double annuity_factor(double lifetime_years, double discount_rate) {
  if (lifetime_years < 0.0 || discount_rate < 0.0) {
    throw std::domain_error("annuity factor of negative lifetime or rate");
  }
  if (lifetime_years < 1.0 || discount_rate >= 1.0) {
    throw std::domain_error("annuity factor needs lifetime >= 1 and rate < 1");
  }
  if (discount_rate == 0.0) return 1.0 / lifetime_years;
  const double growth = std::pow(1.0 + discount_rate, lifetime_years);
  return discount_rate * growth / (growth - 1.0);
}

double effective_unit_capex(const GenerationTech& tech,
                            const Scenario& scenario) {
  if (tech.kind == GenerationKind::kElectrolyzer &&
      scenario.electrolyzer_capex_override) {
    return *scenario.electrolyzer_capex_override;
  }
  return tech.unit_capex;
}

double electrolyzer_unit_capex_from_kw(const GenerationTech& tech,
                                       double dollars_per_kw) {
  // kW_e drawn at rated output = t/h * MWh/t * 1000.
  return dollars_per_kw * tech.unit_capacity * tech.electricity_rate * 1000.0;
}

bool generation_allowed(const Zone& zone, const GenerationTech& tech) {
  if (tech.is_central() && !zone.allow_central_smr) return false;
  return std::find(zone.eligible_generation.begin(),
                   zone.eligible_generation.end(),
                   tech.id) != zone.eligible_generation.end();
}

bool storage_allowed(const Zone& zone, const StorageTech& tech) {
  return std::find(zone.eligible_storage.begin(), zone.eligible_storage.end(),
                   tech.id) != zone.eligible_storage.end();
}

namespace {

void add(std::vector<Diagnostic>& out, std::string code, std::string msg) {
  out.push_back(Diagnostic{std::move(code), std::move(msg)});
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

template <typename T>
void check_unique_ids(const std::vector<T>& items, const char* what,
                      std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (!valid_id(item.id)) {
      add(out, "bad-id", std::string(what) + " id '" + item.id +
                             "' must be non-empty [A-Za-z0-9_-]");
    }
    if (!seen.insert(item.id).second) {
      add(out, "duplicate-id",
          std::string("duplicate ") + what + " id '" + item.id + "'");
    }
  }
}

void check_catalog(const TechnologyCatalog& catalog,
                   std::vector<Diagnostic>& out) {
  check_unique_ids(catalog.generation, "generation", out);
  check_unique_ids(catalog.storage, "storage", out);
  check_unique_ids(catalog.trucks, "truck", out);
  check_unique_ids(catalog.pipelines, "pipeline", out);

  for (const auto& g : catalog.generation) {
    const std::string who = "generation '" + g.id + "': ";
    if (!(g.unit_capacity > 0.0)) add(out, "bad-parameter", who + "unit_capacity must be > 0");
    if (g.unit_capex < 0.0 || g.electricity_rate < 0.0 || g.gas_rate < 0.0 ||
        g.emission_rate < 0.0) {
      add(out, "bad-parameter", who + "rates and costs must be >= 0");
    }
    if (g.min_output_frac < 0.0 || g.max_output_frac > 1.0 ||
        !(g.max_output_frac > 0.0) || g.min_output_frac > g.max_output_frac) {
      add(out, "bad-parameter", who + "need 0 <= min_output_frac <= max_output_frac <= 1");
    }
    if (g.min_up_hours < 0 || g.min_down_hours < 0) {
      add(out, "bad-parameter", who + "min up/down hours must be >= 0");
    }
    if (g.lifetime_years < 1.0) add(out, "bad-parameter", who + "lifetime_years must be >= 1");
  }
  for (const auto& s : catalog.storage) {
    const std::string who = "storage '" + s.id + "': ";
    if (s.min_soc_frac < 0.0 || s.min_soc_frac >= 1.0) {
      add(out, "bad-parameter", who + "min_soc_frac must be in [0,1)");
    }
    if (!(s.charge_efficiency > 0.0) || s.charge_efficiency > 1.0) {
      add(out, "bad-parameter", who + "charge_efficiency must be in (0,1]");
    }
    if (s.capex_per_tonne < 0.0 || s.compressor_capex < 0.0 ||
        s.compressor_electricity < 0.0) {
      add(out, "bad-parameter", who + "costs must be >= 0");
    }
    if (s.lifetime_years < 1.0) add(out, "bad-parameter", who + "lifetime_years must be >= 1");
  }
  for (const auto& j : catalog.trucks) {
    const std::string who = "truck '" + j.id + "': ";
    if (!(j.cargo_capacity > 0.0)) add(out, "bad-parameter", who + "cargo_capacity must be > 0");
    if (j.boiloff_frac < 0.0 || j.boiloff_frac >= 1.0) {
      add(out, "bad-parameter", who + "boiloff_frac must be in [0,1)");
    }
    if (j.unit_capex < 0.0 || j.opex_per_mile < 0.0 || j.emission_rate < 0.0 ||
        j.station_capex < 0.0 || j.station_electricity < 0.0) {
      add(out, "bad-parameter", who + "costs must be >= 0");
    }
    if (j.lifetime_years < 1.0) add(out, "bad-parameter", who + "lifetime_years must be >= 1");
  }
  for (const auto& i : catalog.pipelines) {
    const std::string who = "pipeline '" + i.id + "': ";
    if (!(i.max_flow > 0.0)) add(out, "bad-parameter", who + "max_flow must be > 0");
    if (i.min_linepack_frac < 0.0 || i.min_linepack_frac >= 1.0) {
      add(out, "bad-parameter", who + "min_linepack_frac must be in [0,1)");
    }
    if (i.capex_per_mile < 0.0 || i.linepack_per_mile < 0.0 ||
        i.comp_capex_per_mile < 0.0 || i.comp_capex_fixed < 0.0 ||
        i.comp_elec_per_mile < 0.0 || i.comp_elec_fixed < 0.0) {
      add(out, "bad-parameter", who + "costs must be >= 0");
    }
    if (i.lifetime_years < 1.0) add(out, "bad-parameter", who + "lifetime_years must be >= 1");
  }
}

}  // namespace

std::vector<Diagnostic> validate_timegrid(const TimeGrid& grid) {
  std::vector<Diagnostic> out;
  if (grid.size() == 0) add(out, "empty-timegrid", "time grid has no steps");
  for (double w : grid.weights()) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      add(out, "bad-weight", "time weights must be finite and >= 0");
      break;
    }
  }
  const double hours = grid.represented_hours();
  if (std::abs(hours - kHoursPerYear) > 1e-6) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "weights represent " << hours << " h, expected 8760";
    add(out, "weights-not-annual", msg.str());
  }
  return out;
}

std::vector<Diagnostic> validate_network(const Network& network,
                                         const TechnologyCatalog& catalog,
                                         const Scenario& scenario) {
  std::vector<Diagnostic> out;
  check_unique_ids(network.zones, "zone", out);
  check_catalog(catalog, out);

  const int nz = static_cast<int>(network.zones.size());
  if (nz == 0) add(out, "no-zones", "network has no zones");

  for (const auto& zone : network.zones) {
    for (const auto& g : zone.eligible_generation) {
      if (!catalog.find_generation(g)) {
        add(out, "unknown-tech", "zone '" + zone.id +
                                     "' lists unknown generation tech '" + g + "'");
      }
    }
    for (const auto& s : zone.eligible_storage) {
      if (!catalog.find_storage(s)) {
        add(out, "unknown-tech", "zone '" + zone.id +
                                     "' lists unknown storage tech '" + s + "'");
      }
    }
  }

  std::set<std::pair<int, int>> directed;
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(nz));
  for (const auto& p : network.paths) {
    const int a = network.zone_index(p.from_zone);
    const int b = network.zone_index(p.to_zone);
    const std::string who = "path " + p.from_zone + "->" + p.to_zone + ": ";
    if (a < 0 || b < 0) {
      add(out, "unknown-zone", who + "references an unknown zone");
      continue;
    }
    if (a == b) add(out, "self-path", who + "from and to zone coincide");
    if (!(p.distance > 0.0)) add(out, "bad-distance", who + "distance must be > 0");
    if (p.travel_delay < 1) add(out, "bad-delay", who + "travel_delay must be >= 1");
    if (!directed.insert({a, b}).second) {
      add(out, "duplicate-path", who + "listed twice");
    }
    adjacency[static_cast<size_t>(a)].push_back(b);
  }
  for (const auto& [a, b] : directed) {
    if (!directed.count({b, a})) {
      add(out, "missing-reverse-path",
          "path " + network.zones[static_cast<size_t>(a)].id + "->" +
              network.zones[static_cast<size_t>(b)].id +
              " has no reverse direction");
    }
  }

  // Series shape.
  const auto check_series = [&](const ZoneSeries& s, const char* what) {
    if (s.zones() != nz) {
      add(out, "series-coverage",
          std::string(what) + " series covers " + std::to_string(s.zones()) +
              " zones, network has " + std::to_string(nz));
    }
  };
  check_series(scenario.demand, "demand");
  check_series(scenario.electricity_price, "electricity price");
  check_series(scenario.gas_price, "gas price");
  if (scenario.demand.steps() != scenario.electricity_price.steps() ||
      scenario.demand.steps() != scenario.gas_price.steps()) {
    add(out, "series-length", "demand and price series differ in length");
  }
  for (double d : scenario.demand.raw()) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      add(out, "bad-demand", "demand must be finite and >= 0");
      break;
    }
  }
  if (scenario.discount_rate < 0.0 || scenario.discount_rate >= 1.0) {
    add(out, "bad-scenario", "discount_rate must be in [0,1)");
  }
  if (scenario.carbon_price < 0.0) add(out, "bad-scenario", "carbon_price must be >= 0");
  if (scenario.pipeline_cost_factor < 0.0) {
    add(out, "bad-scenario", "pipeline_cost_factor must be >= 0");
  }

  // Lost load must be the most expensive way to meet demand.
  double worst_marginal = 0.0;
  const double max_elec = scenario.electricity_price.max();
  const double max_gas = scenario.gas_price.max();
  for (const auto& g : catalog.generation) {
    worst_marginal = std::max(worst_marginal,
                              g.electricity_rate * max_elec +
                                  g.gas_rate * max_gas +
                                  g.emission_rate * scenario.carbon_price);
  }
  if (!(scenario.lost_load_cost > worst_marginal)) {
    add(out, "lost-load-too-cheap",
        "lost_load_cost must exceed every marginal production cost");
  }

  // Demand reachability.
  if (scenario.demand.zones() == nz && nz > 0) {
    std::vector<char> source(static_cast<size_t>(nz), 0);
    for (int z = 0; z < nz; ++z) {
      for (const auto& g : catalog.generation) {
        if (generation_allowed(network.zones[static_cast<size_t>(z)], g)) {
          source[static_cast<size_t>(z)] = 1;
        }
      }
    }
    std::vector<char> reached = source;
    std::queue<int> frontier;
    for (int z = 0; z < nz; ++z) {
      if (reached[static_cast<size_t>(z)]) frontier.push(z);
    }
    while (!frontier.empty()) {
      const int z = frontier.front();
      frontier.pop();
      for (int next : adjacency[static_cast<size_t>(z)]) {
        if (!reached[static_cast<size_t>(next)]) {
          reached[static_cast<size_t>(next)] = 1;
          frontier.push(next);
        }
      }
    }
    for (int z = 0; z < nz; ++z) {
      if (scenario.demand.zone_max(z) > 0.0 && !reached[static_cast<size_t>(z)]) {
        add(out, "unreachable-demand",
            "zone '" + network.zones[static_cast<size_t>(z)].id +
                "' has demand but no reachable generation");
      }
    }
  }
  return out;
}

std::vector<Diagnostic> validate_case(const Network& network,
                                      const TechnologyCatalog& catalog,
                                      const TimeGrid& grid,
                                      const Scenario& scenario) {
  std::vector<Diagnostic> out = validate_timegrid(grid);
  auto more = validate_network(network, catalog, scenario);
  out.insert(out.end(), more.begin(), more.end());
  const int steps = grid.size();
  if (scenario.demand.steps() != steps ||
      scenario.electricity_price.steps() != steps ||
      scenario.gas_price.steps() != steps) {
    add(out, "series-length", "series length differs from the time grid (" +
                                  std::to_string(steps) + " steps)");
  }
  return out;
}

}  // namespace hsc
