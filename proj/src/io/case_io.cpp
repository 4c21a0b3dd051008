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

#include "hsc/io/case_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace hsc {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CaseFormatError(p.string(), 0, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

json parse(const std::string& text, const std::string& file) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    long line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw CaseFormatError(file, line, e.what());
  }
}

// Typed field access that names the file and key on failure.
template <typename T>
T get(const json& j, const char* key, const std::string& file) {
  if (!j.contains(key)) throw CaseFormatError(file, 0, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw CaseFormatError(file, 0, std::string("key '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& file) {
  return j.contains(key) ? get<T>(j, key, file) : fallback;
}

ZoneSeries load_series(const fs::path& root, const std::string& name, const Network& net,
                       int steps) {
  const fs::path p = root / name;
  std::ifstream in(p);
  if (!in) throw CaseFormatError(p.string(), 0, "cannot open");
  return read_zone_series(in, net, steps, p.string());
}

}  // namespace

CaseFormatError::CaseFormatError(const std::string& file, long line, const std::string& what)
    : InputError(file + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      file_(file),
      line_(line) {}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string network_to_json(const Network& net) {
  json j;
  j["zones"] = json::array();
  for (const Zone& z : net.zones) {
    j["zones"].push_back({{"id", z.id},
                          {"name", z.name},
                          {"allow_central_smr", z.allow_central_smr},
                          {"eligible_generation", z.eligible_generation},
                          {"eligible_storage", z.eligible_storage}});
  }
  j["paths"] = json::array();
  for (const Path& p : net.paths) {
    j["paths"].push_back({{"from", p.from_zone},
                          {"to", p.to_zone},
                          {"distance", p.distance},
                          {"travel_delay", p.travel_delay}});
  }
  return j.dump(2) + "\n";
}

Network network_from_json(const std::string& text, double step_hours, const std::string& file) {
  const json j = parse(text, file);
  Network net;
  for (const json& z : get<json>(j, "zones", file)) {
    Zone zone;
    zone.id = get<std::string>(z, "id", file);
    zone.name = get_or<std::string>(z, "name", zone.id, file);
    zone.allow_central_smr = get_or<bool>(z, "allow_central_smr", true, file);
    zone.eligible_generation =
        get_or<std::vector<std::string>>(z, "eligible_generation", {}, file);
    zone.eligible_storage = get_or<std::vector<std::string>>(z, "eligible_storage", {}, file);
    net.zones.push_back(std::move(zone));
  }
  for (const json& p : get_or<json>(j, "paths", json::array(), file)) {
    Path path;
    path.from_zone = get<std::string>(p, "from", file);
    path.to_zone = get<std::string>(p, "to", file);
    path.distance = get<double>(p, "distance", file);
    path.travel_delay = p.contains("travel_delay")
                            ? get<int>(p, "travel_delay", file)
                            : default_travel_delay(path.distance, step_hours);
    net.paths.push_back(std::move(path));
  }
  return net;
}

std::string catalog_to_json(const TechnologyCatalog& cat) {
  json j;
  j["generation"] = json::array();
  for (const GenerationTech& g : cat.generation) {
    j["generation"].push_back({{"id", g.id},
                               {"kind", std::string(to_string(g.kind))},
                               {"unit_capacity", g.unit_capacity},
                               {"unit_capex", g.unit_capex},
                               {"electricity_rate", g.electricity_rate},
                               {"gas_rate", g.gas_rate},
                               {"emission_rate", g.emission_rate},
                               {"min_output_frac", g.min_output_frac},
                               {"max_output_frac", g.max_output_frac},
                               {"min_up_hours", g.min_up_hours},
                               {"min_down_hours", g.min_down_hours},
                               {"lifetime_years", g.lifetime_years}});
  }
  j["storage"] = json::array();
  for (const StorageTech& s : cat.storage) {
    j["storage"].push_back({{"id", s.id},
                            {"capex_per_tonne", s.capex_per_tonne},
                            {"charge_efficiency", s.charge_efficiency},
                            {"min_soc_frac", s.min_soc_frac},
                            {"compressor_capex", s.compressor_capex},
                            {"compressor_electricity", s.compressor_electricity},
                            {"lifetime_years", s.lifetime_years}});
  }
  j["trucks"] = json::array();
  for (const TruckType& t : cat.trucks) {
    j["trucks"].push_back({{"id", t.id},
                           {"cargo_capacity", t.cargo_capacity},
                           {"unit_capex", t.unit_capex},
                           {"opex_per_mile", t.opex_per_mile},
                           {"boiloff_frac", t.boiloff_frac},
                           {"emission_rate", t.emission_rate},
                           {"station_capex", t.station_capex},
                           {"station_electricity", t.station_electricity},
                           {"lifetime_years", t.lifetime_years}});
  }
  j["pipelines"] = json::array();
  for (const PipelineType& p : cat.pipelines) {
    j["pipelines"].push_back({{"id", p.id},
                              {"max_flow", p.max_flow},
                              {"capex_per_mile", p.capex_per_mile},
                              {"linepack_per_mile", p.linepack_per_mile},
                              {"min_linepack_frac", p.min_linepack_frac},
                              {"comp_capex_per_mile", p.comp_capex_per_mile},
                              {"comp_capex_fixed", p.comp_capex_fixed},
                              {"comp_elec_per_mile", p.comp_elec_per_mile},
                              {"comp_elec_fixed", p.comp_elec_fixed},
                              {"lifetime_years", p.lifetime_years}});
  }
  return j.dump(2) + "\n";
}

TechnologyCatalog catalog_from_json(const std::string& text, const std::string& file) {
  const json j = parse(text, file);
  TechnologyCatalog cat;
  for (const json& g : get_or<json>(j, "generation", json::array(), file)) {
    GenerationTech t;
    t.id = get<std::string>(g, "id", file);
    try {
      t.kind = generation_kind_from_string(get_or<std::string>(g, "kind", "other", file));
    } catch (const std::exception& e) {
      throw CaseFormatError(file, 0, "generation '" + t.id + "': " + e.what());
    }
    t.unit_capacity = get<double>(g, "unit_capacity", file);
    t.unit_capex = get<double>(g, "unit_capex", file);
    t.electricity_rate = get_or<double>(g, "electricity_rate", 0.0, file);
    t.gas_rate = get_or<double>(g, "gas_rate", 0.0, file);
    t.emission_rate = get_or<double>(g, "emission_rate", 0.0, file);
    t.min_output_frac = get_or<double>(g, "min_output_frac", 0.0, file);
    t.max_output_frac = get_or<double>(g, "max_output_frac", 1.0, file);
    t.min_up_hours = get_or<int>(g, "min_up_hours", 0, file);
    t.min_down_hours = get_or<int>(g, "min_down_hours", 0, file);
    t.lifetime_years = get<double>(g, "lifetime_years", file);
    cat.generation.push_back(std::move(t));
  }
  for (const json& s : get_or<json>(j, "storage", json::array(), file)) {
    StorageTech t;
    t.id = get<std::string>(s, "id", file);
    t.capex_per_tonne = get<double>(s, "capex_per_tonne", file);
    t.charge_efficiency = get_or<double>(s, "charge_efficiency", 1.0, file);
    t.min_soc_frac = get_or<double>(s, "min_soc_frac", 0.0, file);
    t.compressor_capex = get_or<double>(s, "compressor_capex", 0.0, file);
    t.compressor_electricity = get_or<double>(s, "compressor_electricity", 0.0, file);
    t.lifetime_years = get<double>(s, "lifetime_years", file);
    cat.storage.push_back(std::move(t));
  }
  for (const json& k : get_or<json>(j, "trucks", json::array(), file)) {
    TruckType t;
    t.id = get<std::string>(k, "id", file);
    t.cargo_capacity = get<double>(k, "cargo_capacity", file);
    t.unit_capex = get<double>(k, "unit_capex", file);
    t.opex_per_mile = get_or<double>(k, "opex_per_mile", 0.0, file);
    t.boiloff_frac = get_or<double>(k, "boiloff_frac", 0.0, file);
    t.emission_rate = get_or<double>(k, "emission_rate", 0.0, file);
    t.station_capex = get_or<double>(k, "station_capex", 0.0, file);
    t.station_electricity = get_or<double>(k, "station_electricity", 0.0, file);
    t.lifetime_years = get<double>(k, "lifetime_years", file);
    cat.trucks.push_back(std::move(t));
  }
  for (const json& p : get_or<json>(j, "pipelines", json::array(), file)) {
    PipelineType t;
    t.id = get<std::string>(p, "id", file);
    t.max_flow = get<double>(p, "max_flow", file);
    t.capex_per_mile = get<double>(p, "capex_per_mile", file);
    t.linepack_per_mile = get_or<double>(p, "linepack_per_mile", 0.0, file);
    t.min_linepack_frac = get_or<double>(p, "min_linepack_frac", 0.0, file);
    t.comp_capex_per_mile = get_or<double>(p, "comp_capex_per_mile", 0.0, file);
    t.comp_capex_fixed = get_or<double>(p, "comp_capex_fixed", 0.0, file);
    t.comp_elec_per_mile = get_or<double>(p, "comp_elec_per_mile", 0.0, file);
    t.comp_elec_fixed = get_or<double>(p, "comp_elec_fixed", 0.0, file);
    t.lifetime_years = get<double>(p, "lifetime_years", file);
    cat.pipelines.push_back(std::move(t));
  }
  return cat;
}

std::string timegrid_to_json(const TimeGrid& grid) {
  json j;
  j["step_hours"] = grid.step_hours();
  j["periods"] = json::array();
  bool uniform = true;
  for (const Period& p : grid.periods()) {
    for (int t = p.first; t < p.first + p.length; ++t) {
      uniform = uniform && grid.weight(t) == grid.weight(p.first);
    }
  }
  for (const Period& p : grid.periods()) {
    json e = {{"name", p.name}, {"length", p.length}};
    if (uniform) e["weight"] = grid.weight(p.first);
    j["periods"].push_back(e);
  }
  if (!uniform) j["weights"] = grid.weights();
  return j.dump(2) + "\n";
}

TimeGrid timegrid_from_json(const std::string& text, const std::string& file) {
  const json j = parse(text, file);
  const double dt = get_or<double>(j, "step_hours", 1.0, file);
  std::vector<Period> periods;
  std::vector<double> weights;
  int first = 0;
  bool per_period = true;
  for (const json& p : get<json>(j, "periods", file)) {
    Period per;
    per.name = get_or<std::string>(p, "name", "p" + std::to_string(periods.size()), file);
    per.first = first;
    per.length = get<int>(p, "length", file);
    if (per.length <= 0) throw CaseFormatError(file, 0, "period '" + per.name + "' is empty");
    first += per.length;
    if (p.contains("weight")) {
      weights.insert(weights.end(), static_cast<size_t>(per.length),
                     get<double>(p, "weight", file));
    } else {
      per_period = false;
    }
    periods.push_back(std::move(per));
  }
  if (j.contains("weights")) {
    weights = get<std::vector<double>>(j, "weights", file);
  } else if (!per_period) {
    throw CaseFormatError(file, 0, "periods need a weight or a top-level weights array");
  }
  if (weights.size() != static_cast<size_t>(first)) {
    throw CaseFormatError(file, 0, "length mismatch: " + std::to_string(weights.size()) +
                                       " weights for " + std::to_string(first) + " steps");
  }
  try {
    return TimeGrid(dt, std::move(periods), std::move(weights));
  } catch (const InputError& e) {
    throw CaseFormatError(file, 0, e.what());
  }
}

ZoneSeries read_zone_series(std::istream& in, const Network& net, int steps,
                            const std::string& file) {
  const int nz = static_cast<int>(net.zones.size());
  ZoneSeries s(nz, steps, 0.0);
  std::vector<char> seen(static_cast<size_t>(nz) * static_cast<size_t>(steps), 0);
  std::string line;
  long lineno = 0;
  bool header = false;
  long rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "zone,timestep,value") {
        throw CaseFormatError(file, lineno, "expected header 'zone,timestep,value'");
      }
      header = true;
      continue;
    }
    const size_t c1 = line.find(',');
    const size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw CaseFormatError(file, lineno, "expected 3 fields");
    }
    const std::string zone = line.substr(0, c1);
    const int z = net.zone_index(zone);
    if (z < 0) throw CaseFormatError(file, lineno, "unknown zone '" + zone + "'");
    int t = 0;
    double v = 0.0;
    const char* b = line.data() + c1 + 1;
    const char* e = line.data() + c2;
    auto rt = std::from_chars(b, e, t);
    if (rt.ec != std::errc() || rt.ptr != e) throw CaseFormatError(file, lineno, "bad timestep");
    b = line.data() + c2 + 1;
    e = line.data() + line.size();
    auto rv = std::from_chars(b, e, v);
    if (rv.ec != std::errc() || rv.ptr != e || !std::isfinite(v)) {
      throw CaseFormatError(file, lineno, "bad value");
    }
    if (t < 0 || t >= steps) {
      throw CaseFormatError(file, lineno, "length mismatch: timestep " + std::to_string(t) +
                                              " outside grid of " + std::to_string(steps));
    }
    char& mark = seen[static_cast<size_t>(z) * static_cast<size_t>(steps) + static_cast<size_t>(t)];
    if (mark) throw CaseFormatError(file, lineno, "duplicate entry");
    mark = 1;
    s.at(z, t) = v;
    ++rows;
  }
  if (!header) throw CaseFormatError(file, lineno, "empty file");
  if (rows != static_cast<long>(seen.size())) {
    throw CaseFormatError(file, 0, "length mismatch: " + std::to_string(rows) + " rows for " +
                                       std::to_string(seen.size()) + " zone-steps");
  }
  return s;
}

void write_zone_series(std::ostream& out, const ZoneSeries& s, const Network& net) {
  out << "zone,timestep,value\n";
  for (int z = 0; z < s.zones(); ++z) {
    for (int t = 0; t < s.steps(); ++t) {
      out << net.zones[static_cast<size_t>(z)].id << ',' << t << ',' << format_number(s.at(z, t))
          << '\n';
    }
  }
}

CaseBundle load_case(const fs::path& root) {
  if (!fs::is_directory(root)) throw CaseFormatError(root.string(), 0, "not a case directory");
  CaseBundle b;
  const std::string grid_file = (root / "timegrid.json").string();
  b.grid = timegrid_from_json(read_text(root / "timegrid.json"), grid_file);
  b.network = network_from_json(read_text(root / "network.json"), b.grid.step_hours(),
                                (root / "network.json").string());
  b.catalog = catalog_from_json(read_text(root / "catalog.json"),
                                (root / "catalog.json").string());

  const std::string sfile = (root / "scenario.json").string();
  const json j = parse(read_text(root / "scenario.json"), sfile);
  Scenario& sc = b.scenario;
  sc.name = get_or<std::string>(j, "name", "base", sfile);
  sc.carbon_price = get_or<double>(j, "carbon_price", 0.0, sfile);
  sc.lost_load_cost = get_or<double>(j, "lost_load_cost", kDefaultLostLoadCost, sfile);
  sc.discount_rate = get_or<double>(j, "discount_rate", kDefaultDiscountRate, sfile);
  sc.pipeline_cost_factor = get_or<double>(j, "pipeline_cost_factor", 1.0, sfile);
  if (j.contains("electrolyzer_capex_override")) {
    sc.electrolyzer_capex_override = get<double>(j, "electrolyzer_capex_override", sfile);
  } else if (j.contains("electrolyzer_capex_per_kw")) {
    const double per_kw = get<double>(j, "electrolyzer_capex_per_kw", sfile);
    for (const GenerationTech& g : b.catalog.generation) {
      if (g.kind == GenerationKind::kElectrolyzer) {
        sc.electrolyzer_capex_override = electrolyzer_unit_capex_from_kw(g, per_kw);
        break;
      }
    }
  }
  try {
    sc.truck_mode = truck_mode_from_string(get_or<std::string>(j, "truck_mode", "relaxed", sfile));
  } catch (const std::exception& e) {
    throw CaseFormatError(sfile, 0, e.what());
  }
  const int steps = b.grid.size();
  sc.electricity_price =
      load_series(root, get<std::string>(j, "electricity_price", sfile), b.network, steps);
  sc.gas_price = load_series(root, get<std::string>(j, "gas_price", sfile), b.network, steps);
  const json demand = get<json>(j, "demand", sfile);
  if (demand.is_string()) {
    sc.demand = load_series(root, demand.get<std::string>(), b.network, steps);
  } else {
    // D = average demand x normalized refuelling profile.
    const json avg = get<json>(demand, "average", sfile);
    const ZoneSeries profile =
        load_series(root, get<std::string>(demand, "profile", sfile), b.network, steps);
    sc.demand = ZoneSeries(static_cast<int>(b.network.zones.size()), steps);
    for (int z = 0; z < sc.demand.zones(); ++z) {
      const std::string& id = b.network.zones[static_cast<size_t>(z)].id;
      const double mean = get_or<double>(avg, id.c_str(), 0.0, sfile);
      for (int t = 0; t < steps; ++t) sc.demand.at(z, t) = mean * profile.at(z, t);
    }
  }

  const auto diags = validate_case(b.network, b.catalog, b.grid, b.scenario);
  if (!diags.empty()) {
    std::string msg = "invalid case:";
    for (const Diagnostic& d : diags) msg += " [" + d.code + "] " + d.message + ";";
    throw CaseFormatError(root.string(), 0, msg);
  }
  return b;
}

void save_case(const CaseBundle& b, const fs::path& root) {
  fs::create_directories(root);
  write_text(root / "network.json", network_to_json(b.network));
  write_text(root / "catalog.json", catalog_to_json(b.catalog));
  write_text(root / "timegrid.json", timegrid_to_json(b.grid));
  const Scenario& sc = b.scenario;
  json j;
  j["name"] = sc.name;
  j["carbon_price"] = sc.carbon_price;
  j["lost_load_cost"] = sc.lost_load_cost;
  j["discount_rate"] = sc.discount_rate;
  j["pipeline_cost_factor"] = sc.pipeline_cost_factor;
  if (sc.electrolyzer_capex_override) {
    j["electrolyzer_capex_override"] = *sc.electrolyzer_capex_override;
  }
  j["truck_mode"] = std::string(to_string(sc.truck_mode));
  j["electricity_price"] = "electricity_price.csv";
  j["gas_price"] = "gas_price.csv";
  j["demand"] = "demand.csv";
  write_text(root / "scenario.json", j.dump(2) + "\n");
  for (const auto& [name, series] :
       {std::pair<const char*, const ZoneSeries*>{"electricity_price.csv", &sc.electricity_price},
        {"gas_price.csv", &sc.gas_price},
        {"demand.csv", &sc.demand}}) {
    std::ostringstream ss;
    write_zone_series(ss, *series, b.network);
    write_text(root / name, ss.str());
  }
}

}  // namespace hsc
