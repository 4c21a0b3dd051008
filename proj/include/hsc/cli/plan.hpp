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

#ifndef HSC_CLI_PLAN_HPP_
#define HSC_CLI_PLAN_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hsc/core/model.hpp"
#include "hsc/io/case_io.hpp"
#include "hsc/lp/builder.hpp"
#include "hsc/solver/simplex.hpp"

namespace hsc::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,  // uncaught internal error
  kExitAuditFail = 2,
  kExitSolverFail = 3,
  kExitInputError = 4,  // bad flags, case data or solution file schema
  kExitIoError = 5,     // output directory or file not writable
};

enum class SolverChoice { kBuiltin, kExportOnly };

/// One combination of scenario overrides; unset fields keep the case value.
struct ScenarioPoint {
  std::optional<double> carbon_price;
  std::optional<double> elec_capex_per_kw;
  std::optional<double> pipe_cost_factor;
  std::optional<TruckMode> truck_mode;

  // Stable directory name, e.g. "cp100_ec300_pf1_relaxed"; "base" if empty.
  std::string label() const;
  bool operator==(const ScenarioPoint&) const = default;
};

struct RunManifest {
  std::filesystem::path case_path;
  std::vector<double> carbon_prices;
  std::vector<double> elec_capex_per_kw;
  std::vector<double> pipe_cost_factors;
  std::vector<TruckMode> truck_modes;
  SolverChoice solver = SolverChoice::kBuiltin;
  std::filesystem::path out_dir = "out";
  SolverOptions solver_options;
  BuildOptions build_options;
  int threads = 0;  // 0: HSC_PLAN_THREADS or hardware concurrency

  /// Cartesian product of the axes in ascending axis order. A single
  /// empty point when no axis is set.
  std::vector<ScenarioPoint> points() const;
};

/// Input errors carrying the scenario point they arose in.
class PlanError : public std::runtime_error {
 public:
  PlanError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct PointResult {
  ScenarioPoint point;
  int exit_code = kExitOk;
  std::string status;   // solver status, "exported" or "error"
  std::string message;  // first failure line, empty on success
  double objective = 0.0;
  std::optional<double> unit_cost;  // $/kg
  bool audit_pass = false;
  std::map<std::string, double> generation_share;  // by tech id
  std::vector<double> capacity;                    // capacity_columns() order
};

/// Applies overrides and re-validates. Throws InputError.
CaseBundle apply_point(CaseBundle bundle, const ScenarioPoint& point);

/// build -> solve or export -> audit -> save_results into dir. Never throws
/// for per-point failures; they are reported in the result.
PointResult run_point(const CaseBundle& base, const ScenarioPoint& point,
                      const RunManifest& manifest, const std::filesystem::path& dir);

/// Worker count: explicit value, else HSC_PLAN_THREADS, else hardware
/// concurrency; never above the job count or below 1.
int worker_count(int requested, std::size_t jobs);

/// Runs every point; one point writes into out_dir, several into
/// out_dir/<label>. Returns the most severe exit code.
int cmd_run(const RunManifest& manifest, std::ostream& log);

/// Requires at least two points; writes out_dir/sweep.csv after all points.
int cmd_sweep(const RunManifest& manifest, std::ostream& log);

/// Audits an external solution. Prints AuditReport JSON to out; 0 iff PASS.
int cmd_audit(const std::filesystem::path& case_path, const std::filesystem::path& solution_csv,
              const ScenarioPoint& overrides, const BuildOptions& build_options,
              std::ostream& out, std::ostream& log);

/// Sweep table header and rows in point order.
void write_sweep_csv(const std::vector<PointResult>& results, const TechnologyCatalog& catalog,
                     std::ostream& out);

}  // namespace hsc::cli

#endif  // HSC_CLI_PLAN_HPP_
