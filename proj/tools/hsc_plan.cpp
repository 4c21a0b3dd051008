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

// hsc-plan: run, sweep, export and audit hydrogen supply chain cases.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsc/cli/plan.hpp"

namespace {

using hsc::cli::RunManifest;

const std::map<std::string, hsc::TruckMode> kTruckModes = {
    {"relaxed", hsc::TruckMode::kRelaxed},
    {"integer", hsc::TruckMode::kInteger},
    {"existing", hsc::TruckMode::kFixedRouteExisting},
};

const std::map<std::string, hsc::cli::SolverChoice> kSolvers = {
    {"builtin", hsc::cli::SolverChoice::kBuiltin},
    {"export-only", hsc::cli::SolverChoice::kExportOnly},
};

const std::map<std::string, hsc::ExistingFleetConvention> kConventions = {
    {"round-trip", hsc::ExistingFleetConvention::kRoundTrip},
    {"one-way", hsc::ExistingFleetConvention::kOneWay},
};

void add_scenario_flags(CLI::App* cmd, RunManifest& m) {
  cmd->add_option("case", m.case_path, "Case directory")->required()->check(CLI::ExistingDirectory);
  cmd->add_option("--carbon-price", m.carbon_prices, "Carbon price, $/tCO2 (repeatable)");
  cmd->add_option("--elec-capex", m.elec_capex_per_kw, "Electrolyzer capex, $/kW (repeatable)");
  cmd->add_option("--pipe-cost-factor", m.pipe_cost_factors,
                  "Pipeline capex multiplier (repeatable)");
  cmd->add_option("--truck-mode", m.truck_modes, "relaxed | integer | existing (repeatable)")
      ->transform(CLI::CheckedTransformer(kTruckModes, CLI::ignore_case));
  cmd->add_option("--existing-convention", m.build_options.existing_convention,
                  "Fixed-route fleet rate: round-trip | one-way")
      ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
  cmd->add_flag("--existing-integer", m.build_options.existing_integer_fleets,
                "Integer route fleets in existing mode");
}

void add_run_flags(CLI::App* cmd, RunManifest& m) {
  add_scenario_flags(cmd, m);
  cmd->add_option("--solver", m.solver, "builtin | export-only")
      ->transform(CLI::CheckedTransformer(kSolvers, CLI::ignore_case));
  cmd->add_option("--out", m.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--time-limit", m.solver_options.time_limit_seconds,
                  "Branch-and-bound wall clock limit, seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--mip-gap", m.solver_options.gap_tol, "Relative optimality gap")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--node-limit", m.solver_options.node_limit, "Branch-and-bound node limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--threads", m.threads,
                  "Parallel scenario points (default: HSC_PLAN_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hydrogen supply chain planner"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 unexpected error, 2 audit fail, 3 solver fail, 4 input error, "
      "5 output not writable");

  RunManifest run_m;
  CLI::App* run = app.add_subcommand("run", "Build, solve, audit and save each scenario point");
  add_run_flags(run, run_m);

  RunManifest sweep_m;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a scenario grid and merge sweep.csv");
  add_run_flags(sweep, sweep_m);

  RunManifest export_m;
  export_m.solver = hsc::cli::SolverChoice::kExportOnly;
  CLI::App* exp = app.add_subcommand("export", "Write model.mps and model.names.json");
  add_scenario_flags(exp, export_m);
  exp->add_option("--out", export_m.out_dir, "Output directory")->capture_default_str();

  RunManifest audit_m;
  std::string solution_csv;
  CLI::App* aud = app.add_subcommand("audit", "Audit a solution CSV; prints JSON");
  aud->add_option("case", audit_m.case_path, "Case directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  aud->add_option("solution", solution_csv, "Solution CSV (key,value)")->required();
  aud->add_option("--carbon-price", audit_m.carbon_prices, "Carbon price, $/tCO2");
  aud->add_option("--elec-capex", audit_m.elec_capex_per_kw, "Electrolyzer capex, $/kW");
  aud->add_option("--pipe-cost-factor", audit_m.pipe_cost_factors, "Pipeline capex multiplier");
  aud->add_option("--truck-mode", audit_m.truck_modes, "relaxed | integer | existing")
      ->transform(CLI::CheckedTransformer(kTruckModes, CLI::ignore_case));
  aud->add_option("--existing-convention", audit_m.build_options.existing_convention,
                  "round-trip | one-way")
      ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hsc::cli::kExitOk : hsc::cli::kExitInputError;
  }

  try {
    if (*run) return hsc::cli::cmd_run(run_m, std::cerr);
    if (*sweep) return hsc::cli::cmd_sweep(sweep_m, std::cerr);
    if (*exp) return hsc::cli::cmd_run(export_m, std::cerr);
    const auto points = audit_m.points();
    if (points.size() != 1) {
      std::cerr << "error: audit takes at most one value per scenario flag\n";
      return hsc::cli::kExitInputError;
    }
    return hsc::cli::cmd_audit(audit_m.case_path, solution_csv, points.front(),
                               audit_m.build_options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hsc::cli::kExitUnexpected;
  }
}
