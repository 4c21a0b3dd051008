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

#include "support/toy_cases.hpp"

#include <random>
#include <string>

namespace hsc::testing {

TechnologyCatalog reference_catalog() {
  TechnologyCatalog c;
  GenerationTech el;
  el.id = "electrolyzer";
  el.kind = GenerationKind::kElectrolyzer;
  el.unit_capacity = 0.06;
  el.unit_capex = 3e6;
  el.electricity_rate = 53.0;
  el.lifetime_years = 10.0;
  GenerationTech smr;
  smr.id = "smr";
  smr.kind = GenerationKind::kSmr;
  smr.unit_capacity = 9.2;
  smr.unit_capex = 161e6;
  smr.gas_rate = 146.0;
  smr.emission_rate = 10.0;
  smr.lifetime_years = 25.0;
  GenerationTech ccs = smr;
  ccs.id = "smr_ccs";
  ccs.kind = GenerationKind::kSmrCcs;
  ccs.unit_capex = 296e6;
  ccs.gas_rate = 160.0;
  ccs.emission_rate = 1.0;
  c.generation = {el, smr, ccs};

  StorageTech tank;
  tank.id = "gas_tank";
  tank.capex_per_tonne = 0.58e6;
  tank.compressor_capex = 0.5e6;
  tank.compressor_electricity = 2.0;
  tank.lifetime_years = 12.0;
  c.storage = {tank};

  TruckType gas;
  gas.id = "gas_truck";
  gas.cargo_capacity = 0.3;
  gas.unit_capex = 0.3e6;
  gas.opex_per_mile = 1.5;
  gas.boiloff_frac = 0.03;
  gas.station_capex = 1.5e6;
  gas.station_electricity = 1.0;
  gas.lifetime_years = 12.0;
  TruckType liquid;
  liquid.id = "liquid_truck";
  liquid.cargo_capacity = 4.0;
  liquid.unit_capex = 0.8e6;
  liquid.opex_per_mile = 1.5;
  liquid.station_capex = 32e6;
  liquid.station_electricity = 11.0;
  liquid.lifetime_years = 12.0;
  c.trucks = {gas, liquid};

  PipelineType pipe;
  pipe.id = "pipe8";
  pipe.max_flow = 4.0;
  pipe.capex_per_mile = 2.8e6;
  pipe.linepack_per_mile = 0.3;
  pipe.comp_capex_per_mile = 700.0;
  pipe.comp_capex_fixed = 0.75e6;
  pipe.comp_elec_per_mile = 1.0;
  pipe.comp_elec_fixed = 1.0;
  pipe.lifetime_years = 40.0;
  c.pipelines = {pipe};
  return c;
}

CaseBundle one_zone_smr(int steps, double demand, double gas_price) {
  CaseBundle b;
  Zone z;
  z.id = "z1";
  z.eligible_generation = {"smr"};
  b.network.zones = {z};
  b.catalog = reference_catalog();
  b.catalog.storage.clear();
  b.catalog.trucks.clear();
  b.catalog.pipelines.clear();
  b.grid = TimeGrid::uniform(steps);
  b.scenario.demand = ZoneSeries(1, steps, demand);
  b.scenario.gas_price = ZoneSeries(1, steps, gas_price);
  b.scenario.electricity_price = ZoneSeries(1, steps, 40.0);
  return b;
}

CaseBundle zero_case(int steps) {
  CaseBundle b;
  Zone z;
  z.id = "z1";
  b.network.zones = {z};
  b.grid = TimeGrid::uniform(steps);
  b.scenario.demand = ZoneSeries(1, steps, 0.0);
  b.scenario.gas_price = ZoneSeries(1, steps, 0.0);
  b.scenario.electricity_price = ZoneSeries(1, steps, 0.0);
  return b;
}

CaseBundle two_zone_trucks(const TruckCaseOptions& o) {
  CaseBundle b;
  Zone a;
  a.id = "A";
  a.eligible_generation = {"smr"};
  Zone z;
  z.id = "B";
  z.allow_central_smr = false;
  z.eligible_generation = {"electrolyzer"};
  if (o.storage) {
    a.eligible_storage = {"gas_tank"};
    z.eligible_storage = {"gas_tank"};
  }
  b.network.zones = {a, z};
  b.network.paths = {{"A", "B", o.distance, o.delay}, {"B", "A", o.distance, o.delay}};
  b.catalog = reference_catalog();
  b.catalog.generation.resize(2);  // electrolyzer, smr
  b.catalog.pipelines.clear();
  if (!o.storage) b.catalog.storage.clear();
  if (o.gas_trucks_only) b.catalog.trucks.resize(1);
  b.grid = TimeGrid::uniform(o.steps);
  b.scenario.truck_mode = o.mode;
  b.scenario.demand = ZoneSeries(2, o.steps, 0.0);
  for (int t = 0; t < o.steps; ++t) {
    b.scenario.demand.at(0, t) = o.demand_a;
    b.scenario.demand.at(1, t) = o.demand_b;
  }
  b.scenario.gas_price = ZoneSeries(2, o.steps, 3.0);
  b.scenario.electricity_price = ZoneSeries(2, o.steps, 40.0);
  return b;
}

CaseBundle random_truck_case(std::uint64_t seed, TruckMode mode) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nzones(2, 3), delay(1, 3), len(6, 10), nper(1, 2);
  std::uniform_real_distribution<double> dem(0.0, 2.0), dist(40.0, 200.0), price(20.0, 80.0);
  CaseBundle b;
  b.catalog = reference_catalog();
  b.catalog.pipelines.clear();
  const int nz = nzones(rng);
  for (int z = 0; z < nz; ++z) {
    Zone zone;
    zone.id = "z" + std::to_string(z);
    // Zone 0 always hosts SMR so every case is feasible without lost load.
    if (z == 0 || std::bernoulli_distribution(0.3)(rng)) zone.eligible_generation = {"smr"};
    zone.eligible_generation.push_back("electrolyzer");
    if (std::bernoulli_distribution(0.5)(rng)) zone.eligible_storage = {"gas_tank"};
    b.network.zones.push_back(zone);
  }
  for (int a = 0; a < nz; ++a) {
    for (int c = a + 1; c < nz; ++c) {
      const double d = dist(rng);
      const int lag = delay(rng);
      b.network.paths.push_back({"z" + std::to_string(a), "z" + std::to_string(c), d, lag});
      b.network.paths.push_back({"z" + std::to_string(c), "z" + std::to_string(a), d, lag});
    }
  }
  const int length = len(rng);
  const int periods = nper(rng);
  b.grid = TimeGrid::uniform(length, 1.0, periods);
  const int steps = b.grid.size();
  b.scenario.truck_mode = mode;
  b.scenario.carbon_price = std::uniform_real_distribution<double>(0.0, 150.0)(rng);
  b.scenario.demand = ZoneSeries(nz, steps);
  b.scenario.gas_price = ZoneSeries(nz, steps, 3.0);
  b.scenario.electricity_price = ZoneSeries(nz, steps);
  for (int z = 0; z < nz; ++z) {
    for (int t = 0; t < steps; ++t) {
      b.scenario.demand.at(z, t) = z == 0 ? 0.0 : dem(rng);
      b.scenario.electricity_price.at(z, t) = price(rng);
    }
  }
  return b;
}

}  // namespace hsc::testing
