// Copyright 2026 The SliceGuard Authors
//
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

/// \file runner.hpp
/// \brief Orchestration between manifests, solvers, and output files.
///
/// Everything here returns process exit codes from one table: 0 ok,
/// 1 violation or mismatch, 2 parse failure, 3 infeasible, 4 budget expired
/// with no incumbent, 5 enumeration space too large.

#ifndef SLICEGUARD_RUNNER_HPP
#define SLICEGUARD_RUNNER_HPP

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sliceguard/catalog.hpp"
#include "sliceguard/core.hpp"
#include "sliceguard/io.hpp"
#include "sliceguard/metrics.hpp"
#include "sliceguard/model.hpp"
#include "sliceguard/solver.hpp"

namespace sliceguard {

enum ExitCode {
  exit_ok = 0,
  exit_violation = 1,
  exit_parse = 2,
  exit_infeasible = 3,
  exit_no_incumbent = 4,
  exit_space_too_large = 5,
};

struct RunManifest {
  std::string preset;         // exclusive with scenario_path
  std::string scenario_path;  // exclusive with preset
  std::uint64_t seed = 42;
  std::string solver = "bnb";  // bnb | bruteforce | greedy
  std::string out_dir = "out";
  double time_limit = 10800.0;
  double nodes_per_second = 200000.0;
  std::uint64_t node_budget = 0;
  std::optional<bool> exposure;     // override scenario toggle
  std::optional<bool> max_traffic;  // override scenario toggle
  std::optional<double> w_cap;      // override scenario weight
  std::optional<double> w_delay;    // override scenario weight
  BoundMode bound_mode = BoundMode::standard;
  int thread_cap = 1;
};

// Parallelism cap from the environment; the engine itself is serial, the
// cap only bounds what it may use.
inline int thread_cap_from_env() {
  const char* raw = std::getenv("SLICE_GUARD_THREADS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw ParseError(std::string("SLICE_GUARD_THREADS: invalid value '") +
                     raw + "' (need an integer >= 1)");
  return static_cast<int>(v);
}

inline Scenario resolve_scenario(const RunManifest& m) {
  Scenario sc;
  if (!m.preset.empty()) {
    try {
      sc = make_preset(m.preset, m.seed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  } else if (!m.scenario_path.empty()) {
    sc = load_scenario_file(m.scenario_path);
  } else {
    throw ParseError("no scenario: give a preset name or a scenario file");
  }
  if (m.exposure) sc.toggles.exposure = *m.exposure;
  if (m.max_traffic) sc.toggles.max_traffic = *m.max_traffic;
  if (m.w_cap) sc.weights.capacity = *m.w_cap;
  if (m.w_delay) sc.weights.delay = *m.w_delay;
  return sc;
}

inline SolverConfig solver_config_for(const RunManifest& m,
                                      const Scenario& sc) {
  SolverConfig config;
  config.time_limit_seconds = m.time_limit;
  config.nodes_per_second = m.nodes_per_second;
  config.node_budget = m.node_budget;
  config.toggles = sc.toggles;
  config.weights = sc.weights;
  config.bound_mode = m.bound_mode;
  config.thread_cap = m.thread_cap;
  config.seed = sc.seed;
  return config;
}

inline int print_validation_issues(const std::vector<ValidationIssue>& issues,
                                   std::ostream& err) {
  for (const auto& issue : issues)
    err << to_string(issue.code) << ": " << issue.subject << ": "
        << issue.message << "\n";
  return issues.empty() ? exit_ok : exit_violation;
}

inline int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal:
    case SolveStatus::feasible:
      return exit_ok;
    case SolveStatus::infeasible:
      return exit_infeasible;
    case SolveStatus::no_incumbent:
      return exit_no_incumbent;
    case SolveStatus::space_too_large:
      return exit_space_too_large;
  }
  return exit_violation;
}

inline SolveReport dispatch_solver(const std::string& name,
                                   const ScenarioIndex& ix,
                                   const SolverConfig& config) {
  if (name == "bnb") return solve(ix, config);
  if (name == "bruteforce") return solve_brute_force(ix, config);
  if (name == "greedy") return solve_greedy(ix, config);
  throw ParseError("unknown solver: " + name +
                   " (expected bnb, bruteforce, or greedy)");
}

namespace detail {

// Solve one scenario and write scenario/report/placement/metrics files
// into dir. The exposure row carries sweep_value.
inline int solve_into(const Scenario& sc, const SolverConfig& config,
                      const std::string& solver_name, const std::string& dir,
                      std::optional<double> sweep_value, std::ostream& out,
                      std::ostream& err, ExposureRow* row_out) {
  const auto issues = validate_scenario(sc);
  if (!issues.empty()) return print_validation_issues(issues, err);

  const ScenarioIndex ix(sc);
  const SolveReport report = dispatch_solver(solver_name, ix, config);

  std::filesystem::create_directories(dir);
  // A rerun without a placement must not leave the previous run's results
  // next to a report that says there are none.
  for (const char* stale :
       {"placement.json", "exposure.csv", "exposure.json", "capacity.csv",
        "capacity.json", "vnf_capacity.csv", "vnf_capacity.json",
        "utilization.csv", "utilization.json", "delays.csv", "delays.json"})
    std::filesystem::remove(dir + "/" + stale);
  detail::write_text_file(dir + "/scenario.json",
                          scenario_to_json(sc).dump(2) + "\n");
  detail::write_text_file(dir + "/report.json",
                          report_to_json(report).dump(2) + "\n");

  if (report.placement) {
    detail::write_text_file(
        dir + "/placement.json",
        placement_to_json(ix, *report.placement, sc.toggles).dump(2) + "\n");
    const MetricsBundle bundle =
        compute_metrics(ix, *report.placement, sc.weights);
    const ExposureRow row = exposure_row(ix, bundle, sweep_value);
    write_metrics_files(dir, {row}, bundle);
    if (row_out) *row_out = row;
    // The exposure protection's contract: no non-external procedure may sit
    // on an instance hosting an external procedure's entry VNF.
    if (sc.toggles.exposure && bundle.exposed_procedures_first_vnf != 0) {
      err << "exposure contract breached: " << row.exposed_first_vnf
          << " procedures share an entry instance\n";
      return exit_violation;
    }
  }

  out << report.solver << ": " << to_string(report.status)
      << (report.placement
              ? ", objective " + format_number(report.objective)
              : std::string())
      << ", nodes " << report.nodes_explored << "\n";
  return exit_code_for(report.status);
}

}  // namespace detail

// Single solve: everything lands directly in the manifest's out_dir.
inline int run_solve(const RunManifest& m, std::ostream& out,
                     std::ostream& err) {
  const Scenario sc = resolve_scenario(m);
  const SolverConfig config = solver_config_for(m, sc);
  return detail::solve_into(sc, config, m.solver, m.out_dir, std::nullopt,
                            out, err, nullptr);
}

// Sweep: one subdirectory per value plus a combined exposure table at the
// root. Every variant reuses the base scenario's seed and draws.
inline int run_sweep(const RunManifest& m, const SweepSpec& sweep,
                     std::ostream& out, std::ostream& err) {
  const Scenario base = resolve_scenario(m);
  const auto issues = validate_scenario(base);
  if (!issues.empty()) return print_validation_issues(issues, err);

  std::vector<ExposureRow> combined;
  int worst = exit_ok;
  for (const auto& variant : apply_sweep(base, sweep)) {
    SolverConfig config = solver_config_for(m, variant.scenario);
    if (variant.time_limit) config.time_limit_seconds = *variant.time_limit;
    const std::string sub =
        m.out_dir + "/" + format_number(variant.sweep_value);
    out << "[" << to_string(sweep.variable) << " = "
        << format_number(variant.sweep_value) << "]\n";
    ExposureRow row;
    const int code =
        detail::solve_into(variant.scenario, config, m.solver, sub,
                           variant.sweep_value, out, err, &row);
    if (code == exit_ok) {
      combined.push_back(row);
    } else if (worst == exit_ok) {
      worst = code;
    }
  }
  std::filesystem::create_directories(m.out_dir);
  detail::write_text_file(m.out_dir + "/exposure.csv",
                          exposure_csv(combined));
  detail::write_text_file(m.out_dir + "/exposure.json",
                          exposure_json(combined).dump(2) + "\n");
  return worst;
}

// Oracle gate: branch-and-bound against the exhaustive reference.
inline int run_oracle_check(const RunManifest& m, std::ostream& out,
                            std::ostream& err) {
  const Scenario sc = resolve_scenario(m);
  const auto issues = validate_scenario(sc);
  if (!issues.empty()) return print_validation_issues(issues, err);

  const ScenarioIndex ix(sc);
  const SolverConfig config = solver_config_for(m, sc);
  const OracleCheckResult r = oracle_check(ix, config);
  if (r.reference.status == SolveStatus::space_too_large) {
    err << "oracle check refused: " << r.detail << "\n";
    return exit_space_too_large;
  }
  out << "branch-and-bound: " << to_string(r.exact.status) << ", objective "
      << format_number(r.exact.objective) << "\n";
  out << "brute-force:      " << to_string(r.reference.status)
      << ", objective " << format_number(r.reference.objective) << "\n";
  if (r.match) {
    out << "match\n";
    return exit_ok;
  }
  err << "mismatch: " << r.detail << "\n";
  if (r.exact.placement)
    err << "branch-and-bound placement:\n"
        << placement_to_json(ix, *r.exact.placement, sc.toggles).dump(2)
        << "\n";
  if (r.reference.placement)
    err << "brute-force placement:\n"
        << placement_to_json(ix, *r.reference.placement, sc.toggles).dump(2)
        << "\n";
  return exit_violation;
}

// Validate only.
inline int run_validate(const RunManifest& m, std::ostream& out,
                        std::ostream& err) {
  const Scenario sc = resolve_scenario(m);
  const auto issues = validate_scenario(sc);
  const int code = print_validation_issues(issues, err);
  if (code == exit_ok) out << "ok\n";
  return code;
}

}  // namespace sliceguard

#endif  // SLICEGUARD_RUNNER_HPP
