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

#include "hsc/cli/plan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hsc/audit/audit.hpp"
#include "hsc/io/case_io.hpp"
#include "hsc/io/results.hpp"
#include "hsc/solver/mps.hpp"
#include "hsc/solver/solution.hpp"

namespace hsc::cli {
namespace {

namespace fs = std::filesystem;

std::string tag_number(double v) {
  std::string s = format_number(v);
  std::replace(s.begin(), s.end(), '.', 'p');
  std::replace(s.begin(), s.end(), '-', 'm');
  std::replace(s.begin(), s.end(), '+', '_');
  return s;
}

template <class T>
std::vector<std::optional<T>> axis(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::optional<T>> out(values.begin(), values.end());
  if (out.empty()) out.push_back(std::nullopt);
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PlanError(kExitIoError, "cannot write " + path.string());
  f << text;
  if (!f) throw PlanError(kExitIoError, "write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw PlanError(kExitIoError, "cannot create output directory " + dir.string());
  }
}

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::string run_summary(const Solution& sol, const PointResult& r) {
  std::ostringstream os;
  os << "status," << r.status << '\n'
     << "objective," << format_number(sol.objective) << '\n'
     << "best_bound," << format_number(sol.stats.best_bound) << '\n'
     << "gap," << format_number(sol.stats.gap) << '\n'
     << "iterations," << sol.stats.iterations << '\n'
     << "nodes," << sol.stats.nodes << '\n'
     << "audit," << (r.audit_pass ? "PASS" : "FAIL") << '\n'
     << "unit_cost_per_kg," << opt_number(r.unit_cost) << '\n';
  return os.str();
}

void fill_from_report(PointResult& r, const AuditReport& rep, const TechnologyCatalog& catalog) {
  r.audit_pass = rep.pass();
  r.unit_cost = unit_hydrogen_cost(rep);
  double total = 0.0;
  for (const auto& [id, v] : rep.generation_output) total += v;
  for (const GenerationTech& g : catalog.generation) {
    const auto it = rep.generation_output.find(g.id);
    const double out = it == rep.generation_output.end() ? 0.0 : it->second;
    r.generation_share[g.id] = total > 0.0 ? out / total : 0.0;
  }
  r.capacity = capacity_row(rep, catalog);
}

}  // namespace

std::string ScenarioPoint::label() const {
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : "_") + part; };
  if (carbon_price) add("cp" + tag_number(*carbon_price));
  if (elec_capex_per_kw) add("ec" + tag_number(*elec_capex_per_kw));
  if (pipe_cost_factor) add("pf" + tag_number(*pipe_cost_factor));
  if (truck_mode) add(std::string(to_string(*truck_mode)));
  return s.empty() ? "base" : s;
}

std::vector<ScenarioPoint> RunManifest::points() const {
  std::vector<ScenarioPoint> out;
  for (const auto& cp : axis(carbon_prices)) {
    for (const auto& ec : axis(elec_capex_per_kw)) {
      for (const auto& pf : axis(pipe_cost_factors)) {
        for (const auto& tm : axis(truck_modes)) out.push_back({cp, ec, pf, tm});
      }
    }
  }
  return out;
}

CaseBundle apply_point(CaseBundle b, const ScenarioPoint& p) {
  Scenario& sc = b.scenario;
  if (p.carbon_price) {
    if (*p.carbon_price < 0.0) throw InputError("carbon price must be >= 0");
    sc.carbon_price = *p.carbon_price;
  }
  if (p.pipe_cost_factor) {
    if (!(*p.pipe_cost_factor > 0.0)) throw InputError("pipeline cost factor must be > 0");
    sc.pipeline_cost_factor = *p.pipe_cost_factor;
  }
  if (p.truck_mode) sc.truck_mode = *p.truck_mode;
  if (p.elec_capex_per_kw) {
    if (*p.elec_capex_per_kw < 0.0) throw InputError("electrolyzer capex must be >= 0");
    const auto it = std::find_if(b.catalog.generation.begin(), b.catalog.generation.end(),
                                 [](const GenerationTech& g) {
                                   return g.kind == GenerationKind::kElectrolyzer;
                                 });
    if (it == b.catalog.generation.end()) {
      throw InputError("--elec-capex given but the catalog has no electrolyzer");
    }
    sc.electrolyzer_capex_override = electrolyzer_unit_capex_from_kw(*it, *p.elec_capex_per_kw);
  }
  const auto diags = validate_case(b.network, b.catalog, b.grid, sc);
  if (!diags.empty()) {
    std::string msg = "invalid scenario:";
    for (const Diagnostic& d : diags) msg += " [" + d.code + "] " + d.message + ";";
    throw InputError(msg);
  }
  return b;
}

PointResult run_point(const CaseBundle& base, const ScenarioPoint& point,
                      const RunManifest& manifest, const fs::path& dir) {
  PointResult r;
  r.point = point;
  auto fail = [&](int code, const std::string& status, const std::string& msg) {
    r.exit_code = code;
    r.status = status;
    r.message = msg;
    return r;
  };
  try {
    ensure_dir(dir);
    const CaseBundle b = apply_point(base, point);
    const MilpInstance inst =
        build(b.network, b.catalog, b.grid, b.scenario, manifest.build_options);

    if (manifest.solver == SolverChoice::kExportOnly) {
      std::ostringstream mps;
      const MpsNameMap names = write_mps(inst, mps);
      write_file(dir / "model.mps", mps.str());
      write_file(dir / "model.names.json", names.to_json());
      r.status = "exported";
      r.audit_pass = true;
      return r;
    }

    const Solution sol = inst.has_integers() ? solve_milp(inst, manifest.solver_options)
                                             : solve_lp(inst, manifest.solver_options);
    r.status = std::string(to_string(sol.status));
    r.objective = sol.objective;
    if (!sol.has_values()) {
      return fail(kExitSolverFail, r.status, "solver returned no solution (" + r.status + ")");
    }
    const AuditReport rep =
        audit(sol, b.network, b.catalog, b.grid, b.scenario, manifest.build_options);
    fill_from_report(r, rep, b.catalog);
    save_results(sol, rep, b, dir);
    write_file(dir / "run_summary.csv", run_summary(sol, r));
    if (!rep.pass()) {
      return fail(kExitAuditFail, r.status,
                  "audit FAIL in family " + rep.failing_family().value_or("?") +
                      " (max violation " + format_number(rep.max_violation()) + ")");
    }
    return r;
  } catch (const PlanError& e) {
    return fail(e.exit_code(), "error", e.what());
  } catch (const AuditError& e) {
    return fail(kExitSolverFail, r.status.empty() ? "error" : r.status, e.what());
  } catch (const InputError& e) {
    return fail(kExitInputError, "error", e.what());
  } catch (const BuildError& e) {
    return fail(kExitInputError, "error", e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitIoError, "error", e.what());
  } catch (const std::exception& e) {
    return fail(kExitUnexpected, "error", e.what());
  }
}

int worker_count(int requested, std::size_t jobs) {
  long n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("HSC_PLAN_THREADS"); env && *env) {
      char* end = nullptr;
      n = std::strtol(env, &end, 10);
      if (*end != '\0' || n <= 0) {
        throw PlanError(kExitInputError, "HSC_PLAN_THREADS must be a positive integer");
      }
    } else {
      n = static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
    }
  }
  n = std::min<long>(n, static_cast<long>(std::max<std::size_t>(jobs, 1)));
  return static_cast<int>(std::max(1L, n));
}

namespace {

int severity(int code) {
  // Higher wins when points disagree.
  switch (code) {
    case kExitOk: return 0;
    case kExitAuditFail: return 1;
    case kExitSolverFail: return 2;
    case kExitInputError: return 3;
    case kExitIoError: return 4;
    default: return 5;
  }
}

struct Batch {
  CaseBundle base;
  std::vector<ScenarioPoint> points;
  std::vector<PointResult> results;
};

Batch run_all(const RunManifest& m, bool subdirs, std::ostream& log) {
  Batch batch;
  try {
    batch.base = load_case(m.case_path);
  } catch (const InputError& e) {
    throw PlanError(kExitInputError, e.what());
  }
  batch.points = m.points();
  batch.results.resize(batch.points.size());
  ensure_dir(m.out_dir);

  const int workers = worker_count(m.threads, batch.points.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < batch.points.size(); i = next++) {
      const ScenarioPoint& p = batch.points[i];
      const fs::path dir = subdirs ? m.out_dir / p.label() : m.out_dir;
      batch.results[i] = run_point(batch.base, p, m, dir);
      const PointResult& r = batch.results[i];
      std::lock_guard<std::mutex> lock(log_mu);
      log << '[' << p.label() << "] " << r.status;
      if (r.exit_code == kExitOk && m.solver == SolverChoice::kBuiltin) {
        log << " objective " << format_number(r.objective) << " audit PASS";
      }
      if (!r.message.empty()) log << ": " << r.message;
      log << '\n';
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return batch;
}

int worst_code(const std::vector<PointResult>& results) {
  int code = kExitOk;
  for (const PointResult& r : results) {
    if (severity(r.exit_code) > severity(code)) code = r.exit_code;
  }
  return code;
}

template <class F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const PlanError& e) {
    log << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const InputError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

}  // namespace

int cmd_run(const RunManifest& m, std::ostream& log) {
  return guarded(log, [&] {
    const bool subdirs = m.points().size() > 1;
    return worst_code(run_all(m, subdirs, log).results);
  });
}

void write_sweep_csv(const std::vector<PointResult>& results, const TechnologyCatalog& catalog,
                     std::ostream& out) {
  out << "carbon_price,elec_capex_per_kw,pipe_cost_factor,truck_mode,status,audit,exit_code,"
         "objective,unit_cost_per_kg";
  for (const GenerationTech& g : catalog.generation) out << ",share_" << g.id;
  for (const std::string& c : capacity_columns()) out << ',' << c;
  out << '\n';
  const std::size_t ncap = capacity_columns().size();
  for (const PointResult& r : results) {
    const ScenarioPoint& p = r.point;
    const bool ok = r.exit_code == kExitOk || r.exit_code == kExitAuditFail;
    const bool solved = ok && r.status != "exported";
    out << opt_number(p.carbon_price) << ',' << opt_number(p.elec_capex_per_kw) << ','
        << opt_number(p.pipe_cost_factor) << ','
        << (p.truck_mode ? std::string(to_string(*p.truck_mode)) : std::string()) << ','
        << r.status << ',' << (!solved ? "" : r.audit_pass ? "PASS" : "FAIL") << ','
        << r.exit_code << ',' << (solved ? format_number(r.objective) : "") << ','
        << (solved ? opt_number(r.unit_cost) : "");
    for (const GenerationTech& g : catalog.generation) {
      out << ',';
      if (solved) out << format_number(r.generation_share.at(g.id));
    }
    for (std::size_t i = 0; i < ncap; ++i) {
      out << ',';
      if (solved && i < r.capacity.size()) out << format_number(r.capacity[i]);
    }
    out << '\n';
  }
}

int cmd_sweep(const RunManifest& m, std::ostream& log) {
  return guarded(log, [&] {
    if (m.points().size() < 2) {
      throw PlanError(kExitInputError, "sweep needs at least two scenario points");
    }
    const Batch batch = run_all(m, true, log);
    std::ostringstream csv;
    write_sweep_csv(batch.results, batch.base.catalog, csv);
    write_file(m.out_dir / "sweep.csv", csv.str());
    log << "wrote " << (m.out_dir / "sweep.csv").string() << '\n';
    return worst_code(batch.results);
  });
}

int cmd_audit(const fs::path& case_path, const fs::path& solution_csv,
              const ScenarioPoint& overrides, const BuildOptions& build_options,
              std::ostream& out, std::ostream& log) {
  return guarded(log, [&]() -> int {
    const CaseBundle b = apply_point(load_case(case_path), overrides);
    std::ifstream in(solution_csv);
    if (!in) throw PlanError(kExitInputError, "cannot read " + solution_csv.string());
    Solution sol;
    try {
      sol = read_solution_csv(in);
      sol.objective = recompute_objective(sol, b.network, b.catalog, b.grid, b.scenario).total();
    } catch (const SolutionFormatError& e) {
      throw PlanError(kExitInputError, solution_csv.string() + ": " + e.what());
    } catch (const MissingVariableError& e) {
      throw PlanError(kExitInputError, solution_csv.string() + ": " + e.what());
    }
    AuditReport rep;
    try {
      rep = audit(sol, b.network, b.catalog, b.grid, b.scenario, build_options);
    } catch (const MissingVariableError& e) {
      throw PlanError(kExitInputError, solution_csv.string() + ": " + e.what());
    }
    out << rep.to_json();
    if (rep.pass()) {
      log << "audit PASS\n";
      return kExitOk;
    }
    log << "audit FAIL in family " << rep.failing_family().value_or("?") << " (max violation "
        << format_number(rep.max_violation()) << ")\n";
    return kExitAuditFail;
  });
}

}  // namespace hsc::cli
