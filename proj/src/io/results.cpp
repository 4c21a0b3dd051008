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

#include "hsc/io/results.hpp"

#include <fstream>
#include <sstream>

#include "hsc/lp/instance.hpp"

namespace hsc {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& p, const std::string& text, std::vector<fs::path>& written) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + p.string());
  written.push_back(p);
}

double generation_by_kind(const AuditReport& r, const TechnologyCatalog& cat,
                          GenerationKind kind) {
  double sum = 0.0;
  for (const GenerationTech& g : cat.generation) {
    if (g.kind != kind) continue;
    auto it = r.capacity.generation.find(g.id);
    if (it != r.capacity.generation.end()) sum += it->second;
  }
  return sum;
}

double sum_map(const std::map<std::string, double>& m) {
  double s = 0.0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

}  // namespace

std::vector<std::string> capacity_columns() {
  return {"Pipeline Flow Capacity (tonne/hour)", "Truck Capacity (tonne)",
          "Storage Capacity (tonne)",            "Electrolyzer Capacity (tonne/hour)",
          "SMR Capacity (tonne/hour)",           "SMR w CCS Capacity (tonne/hour)"};
}

std::vector<double> capacity_row(const AuditReport& r, const TechnologyCatalog& cat) {
  return {r.capacity.pipeline_flow,
          sum_map(r.capacity.truck_capacity),
          sum_map(r.capacity.storage),
          generation_by_kind(r, cat, GenerationKind::kElectrolyzer),
          generation_by_kind(r, cat, GenerationKind::kSmr),
          generation_by_kind(r, cat, GenerationKind::kSmrCcs)};
}

std::vector<fs::path> save_results(const Solution& sol, const AuditReport& report,
                                   const CaseBundle& b, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  const TechnologyCatalog& cat = b.catalog;

  {
    std::ostringstream os;
    const auto cols = capacity_columns();
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    const auto row = capacity_row(report, cat);
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
    write_file(out_dir / "capacity.csv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "category,technology,value,unit\n";
    for (const auto& [id, v] : report.capacity.generation) {
      os << "generation," << id << ',' << format_number(v) << ",tonne/hour\n";
    }
    for (const auto& [id, v] : report.capacity.storage) {
      os << "storage," << id << ',' << format_number(v) << ",tonne\n";
    }
    for (const auto& [id, v] : report.capacity.truck_fleet) {
      os << "truck_fleet," << id << ',' << format_number(v) << ",trucks\n";
    }
    for (const auto& [id, v] : report.capacity.truck_capacity) {
      os << "truck_capacity," << id << ',' << format_number(v) << ",tonne\n";
    }
    os << "pipeline,all," << format_number(report.capacity.pipeline_flow) << ",tonne/hour\n";
    write_file(out_dir / "capacity_by_tech.csv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "term,value\n";
    for (const auto& [name, v] : report.costs.terms()) os << name << ',' << format_number(v) << '\n';
    os << "total," << format_number(report.costs.total()) << '\n';
    const auto unit = unit_hydrogen_cost(report);
    os << "unit_hydrogen_cost_per_kg," << (unit ? format_number(*unit) : "undefined") << '\n';
    write_file(out_dir / "cost_breakdown.csv", os.str(), written);
  }

  const TimeGrid& grid = b.grid;
  const Scenario& sc = b.scenario;
  for (int z = 0; z < static_cast<int>(b.network.zones.size()); ++z) {
    const Zone& zone = b.network.zones[static_cast<size_t>(z)];
    std::ostringstream os;
    os << "timestep,demand,lost_load,transport,compression_power";
    std::vector<const GenerationTech*> gens;
    for (const GenerationTech& g : cat.generation) {
      if (!generation_allowed(zone, g)) continue;
      gens.push_back(&g);
      os << ",gen_" << g.id;
    }
    std::vector<const StorageTech*> stos;
    for (const StorageTech& s : cat.storage) {
      if (!storage_allowed(zone, s)) continue;
      stos.push_back(&s);
      os << ",charge_" << s.id << ",discharge_" << s.id << ",level_" << s.id;
    }
    os << ",electricity_price\n";
    auto val = [&](VarKind k, const std::string& tech, int t) {
      return format_number(sol.value(make_key(k, tech, zone.id, t)));
    };
    for (int t = 0; t < grid.size(); ++t) {
      os << t << ',' << format_number(sc.demand.at(z, t)) << ','
         << val(VarKind::kLostLoad, "", t) << ',' << val(VarKind::kTransport, "", t) << ','
         << val(VarKind::kCompPower, "", t);
      for (const GenerationTech* g : gens) os << ',' << val(VarKind::kGenOutput, g->id, t);
      for (const StorageTech* s : stos) {
        os << ',' << val(VarKind::kStoCharge, s->id, t) << ','
           << val(VarKind::kStoDischarge, s->id, t) << ',' << val(VarKind::kStoLevel, s->id, t);
      }
      os << ',' << format_number(sc.electricity_price.at(z, t)) << '\n';
    }
    write_file(out_dir / ("dispatch_" + zone.id + ".csv"), os.str(), written);
  }
  {
    std::ostringstream os;
    write_solution_csv(sol, os);
    write_file(out_dir / "solution.csv", os.str(), written);
  }
  write_file(out_dir / "audit.json", report.to_json(), written);
  return written;
}

}  // namespace hsc
