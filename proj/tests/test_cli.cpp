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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hsc/audit/audit.hpp"
#include "hsc/cli/plan.hpp"
#include "hsc/io/case_io.hpp"
#include "hsc/lp/builder.hpp"
#include "hsc/solver/mps.hpp"
#include "hsc/solver/simplex.hpp"
#include "support/toy_cases.hpp"

using namespace hsc;
using namespace hsc::cli;
using namespace hsc::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hsc_test_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

int column(const std::vector<std::string>& header, const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  FAIL("missing column " << name);
  return -1;
}

fs::path truck_case_dir(const fs::path& root) {
  TruckCaseOptions o;
  o.steps = 12;
  o.demand_b = 2.0;
  const fs::path dir = root / "case";
  save_case(two_zone_trucks(o), dir);
  return dir;
}

RunManifest manifest_for(const fs::path& case_dir, const fs::path& out) {
  RunManifest m;
  m.case_path = case_dir;
  m.out_dir = out;
  m.threads = 1;
  return m;
}

}  // namespace

TEST_CASE("scenario points are the sorted cartesian product") {
  RunManifest m;
  CHECK(m.points().size() == 1);
  CHECK(m.points().front().label() == "base");

  m.carbon_prices = {100, 0, 100};
  m.elec_capex_per_kw = {1000, 300};
  const auto pts = m.points();
  REQUIRE(pts.size() == 4);
  CHECK(*pts[0].carbon_price == 0);
  CHECK(*pts[0].elec_capex_per_kw == 300);
  CHECK(*pts[1].carbon_price == 0);
  CHECK(*pts[1].elec_capex_per_kw == 1000);
  CHECK(*pts[3].carbon_price == 100);
  CHECK_FALSE(pts[0].pipe_cost_factor.has_value());
  CHECK(pts[1].label() == "cp0_ec1000");

  m.pipe_cost_factors = {0.5};
  m.truck_modes = {TruckMode::kInteger, TruckMode::kRelaxed};
  CHECK(m.points().size() == 8);
  CHECK(m.points().front().label() == "cp0_ec300_pf0p5_relaxed");
}

TEST_CASE("worker count honours the environment and the job count") {
  CHECK(worker_count(3, 10) == 3);
  CHECK(worker_count(8, 2) == 2);
  CHECK(worker_count(4, 0) == 1);
  ::setenv("HSC_PLAN_THREADS", "2", 1);
  CHECK(worker_count(0, 10) == 2);
  ::setenv("HSC_PLAN_THREADS", "zero", 1);
  CHECK_THROWS_AS(worker_count(0, 10), PlanError);
  ::unsetenv("HSC_PLAN_THREADS");
  CHECK(worker_count(0, 1) == 1);
}

TEST_CASE("run solves, audits and saves one point") {
  const fs::path root = scratch_dir("run");
  const fs::path case_dir = truck_case_dir(root);
  RunManifest m = manifest_for(case_dir, root / "out");
  m.carbon_prices = {100};
  std::ostringstream log;
  REQUIRE(cmd_run(m, log) == kExitOk);
  for (const char* f : {"capacity.csv", "capacity_by_tech.csv", "cost_breakdown.csv",
                        "dispatch_A.csv", "dispatch_B.csv", "solution.csv", "audit.json",
                        "run_summary.csv"}) {
    CHECK_MESSAGE(fs::exists(root / "out" / f), f);
  }
  CHECK(log.str().find("audit PASS") != std::string::npos);

  // Independent path: build and solve the same scenario directly.
  CaseBundle b = load_case(case_dir);
  b.scenario.carbon_price = 100;
  const Solution direct = solve_lp(build(b.network, b.catalog, b.grid, b.scenario));
  const auto summary = csv_rows(root / "out" / "run_summary.csv");
  REQUIRE(summary.size() >= 2);
  CHECK(summary[1][0] == "objective");
  CHECK(std::stod(summary[1][1]) == doctest::Approx(direct.objective).epsilon(1e-9));
}

TEST_CASE("export-only writes an MPS model and no solution") {
  const fs::path root = scratch_dir("export");
  const fs::path case_dir = truck_case_dir(root);
  RunManifest m = manifest_for(case_dir, root / "out");
  m.solver = SolverChoice::kExportOnly;
  std::ostringstream log;
  REQUIRE(cmd_run(m, log) == kExitOk);
  CHECK_FALSE(fs::exists(root / "out" / "solution.csv"));
  REQUIRE(fs::exists(root / "out" / "model.mps"));
  const MpsNameMap names = MpsNameMap::from_json(slurp(root / "out" / "model.names.json"));
  std::ifstream mps(root / "out" / "model.mps");
  const MilpInstance back = read_mps(mps, &names);
  const CaseBundle b = load_case(case_dir);
  const MilpInstance direct = build(b.network, b.catalog, b.grid, b.scenario);
  CHECK(back.num_cols() == direct.num_cols());
  CHECK(back.num_rows() == direct.num_rows());
}

TEST_CASE("2x2 sweep gives four sorted rows and is deterministic") {
  const fs::path root = scratch_dir("sweep");
  const fs::path case_dir = truck_case_dir(root);
  RunManifest m = manifest_for(case_dir, root / "serial");
  m.carbon_prices = {100, 0};
  m.elec_capex_per_kw = {300, 1000};
  std::ostringstream log;
  REQUIRE(cmd_sweep(m, log) == kExitOk);
  const auto rows = csv_rows(root / "serial" / "sweep.csv");
  REQUIRE(rows.size() == 5);
  const auto& h = rows[0];
  const int cp = column(h, "carbon_price"), ec = column(h, "elec_capex_per_kw");
  const int share = column(h, "share_electrolyzer"), st = column(h, "status");
  CHECK(rows[1][cp] == "0");
  CHECK(rows[1][ec] == "300");
  CHECK(rows[2][cp] == "0");
  CHECK(rows[2][ec] == "1000");
  CHECK(rows[3][cp] == "100");
  CHECK(rows[4][ec] == "1000");
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][st] == "optimal");
    CHECK(rows[i][column(h, "audit")] == "PASS");
    CHECK(rows[i].size() == h.size());
  }
  // Electrolyzer share does not fall as carbon rises at fixed capex.
  CHECK(std::stod(rows[3][share]) >= std::stod(rows[1][share]) - 1e-9);
  CHECK(std::stod(rows[4][share]) >= std::stod(rows[2][share]) - 1e-9);
  CHECK(fs::exists(root / "serial" / "cp0_ec300" / "solution.csv"));

  m.out_dir = root / "parallel";
  m.threads = 4;
  REQUIRE(cmd_sweep(m, log) == kExitOk);
  CHECK(slurp(root / "serial" / "sweep.csv") == slurp(root / "parallel" / "sweep.csv"));
  for (const ScenarioPoint& p : m.points()) {
    for (const char* f : {"solution.csv", "capacity.csv", "cost_breakdown.csv"}) {
      CHECK(slurp(root / "serial" / p.label() / f) == slurp(root / "parallel" / p.label() / f));
    }
  }
}

TEST_CASE("mode sweep: relaxed never costs more than the fixed-route baseline") {
  const fs::path root = scratch_dir("modes");
  const fs::path case_dir = truck_case_dir(root);
  RunManifest m = manifest_for(case_dir, root / "out");
  m.truck_modes = {TruckMode::kRelaxed, TruckMode::kFixedRouteExisting};
  m.threads = 2;
  std::ostringstream log;
  REQUIRE(cmd_sweep(m, log) == kExitOk);
  const auto rows = csv_rows(root / "out" / "sweep.csv");
  REQUIRE(rows.size() == 3);
  const int mode = column(rows[0], "truck_mode"), obj = column(rows[0], "objective");
  CHECK(rows[1][mode] == "relaxed");
  CHECK(rows[2][mode] == "existing");
  CHECK(std::stod(rows[1][obj]) <= std::stod(rows[2][obj]) * (1 + 1e-9));
}

TEST_CASE("audit of an external solution file") {
  const fs::path root = scratch_dir("audit");
  const fs::path case_dir = truck_case_dir(root);
  RunManifest m = manifest_for(case_dir, root / "out");
  std::ostringstream log;
  REQUIRE(cmd_run(m, log) == kExitOk);
  const fs::path sol = root / "out" / "solution.csv";

  std::ostringstream json;
  CHECK(cmd_audit(case_dir, sol, {}, {}, json, log) == kExitOk);
  CHECK(json.str().find("\"pass\": true") != std::string::npos);

  // Corrupt one lost-load value: bounds and balance both break.
  std::string text = slurp(sol);
  const auto at = text.find("lost_load/B/0,");
  REQUIRE(at != std::string::npos);
  const auto eol = text.find('\n', at);
  text.replace(at, eol - at, "lost_load/B/0,-1");
  const fs::path bad = root / "bad.csv";
  std::ofstream(bad) << text;
  std::ostringstream json2, log2;
  CHECK(cmd_audit(case_dir, bad, {}, {}, json2, log2) == kExitAuditFail);
  CHECK(json2.str().find("\"pass\": false") != std::string::npos);
  CHECK(log2.str().find("FAIL in family") != std::string::npos);

  const fs::path empty = root / "empty.csv";
  std::ofstream(empty).flush();
  std::ostringstream json3;
  CHECK(cmd_audit(case_dir, empty, {}, {}, json3, log) == kExitInputError);
  CHECK(json3.str().empty());

  // A solution missing a required variable is a schema error.
  const fs::path partial = root / "partial.csv";
  std::ofstream(partial) << "key,value\nlost_load/B/0,0\n";
  CHECK(cmd_audit(case_dir, partial, {}, {}, json3, log) == kExitInputError);
  CHECK(cmd_audit(case_dir, root / "nope.csv", {}, {}, json3, log) == kExitInputError);
}

TEST_CASE("failure paths map to distinct exit codes") {
  const fs::path root = scratch_dir("errors");
  const fs::path case_dir = truck_case_dir(root);
  std::ostringstream log;

  RunManifest missing = manifest_for(root / "no_such_case", root / "o1");
  CHECK(cmd_run(missing, log) == kExitInputError);

  RunManifest neg = manifest_for(case_dir, root / "o2");
  neg.carbon_prices = {-5};
  CHECK(cmd_run(neg, log) == kExitInputError);
  CHECK(log.str().find("[cp" ) != std::string::npos);

  const fs::path smr_case = root / "smr";
  CaseBundle smr_only = one_zone_smr(4, 1.0, 3.0);
  std::erase_if(smr_only.catalog.generation, [](const GenerationTech& g) {
    return g.kind == GenerationKind::kElectrolyzer;
  });
  save_case(smr_only, smr_case);
  RunManifest no_elec = manifest_for(smr_case, root / "o3");
  no_elec.elec_capex_per_kw = {300};
  CHECK(cmd_run(no_elec, log) == kExitInputError);

  RunManifest one = manifest_for(case_dir, root / "o4");
  CHECK(cmd_sweep(one, log) == kExitInputError);

  std::ofstream(root / "a_file") << "x";
  RunManifest unwritable = manifest_for(case_dir, root / "a_file");
  CHECK(cmd_run(unwritable, log) == kExitIoError);

  RunManifest starved = manifest_for(case_dir, root / "o5");
  starved.solver_options.max_iterations = 1;
  CHECK(cmd_run(starved, log) == kExitSolverFail);

  // Mixed outcomes report the most severe code and flag the failing row.
  RunManifest mixed = manifest_for(case_dir, root / "o6");
  mixed.carbon_prices = {-5, 100};
  CHECK(cmd_sweep(mixed, log) == kExitInputError);
  const auto rows = csv_rows(root / "o6" / "sweep.csv");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][column(rows[0], "status")] == "error");
  CHECK(rows[1][column(rows[0], "exit_code")] == "4");
  CHECK(rows[2][column(rows[0], "status")] == "optimal");
}
