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

// Command-line front end: validate scenarios, run single solves and
// parameter sweeps, and compare the exact solver against the exhaustive
// reference. Exit codes: 0 ok, 1 violation/mismatch, 2 parse failure,
// 3 infeasible, 4 budget expired with no incumbent, 5 space too large.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sliceguard/catalog.hpp"
#include "sliceguard/runner.hpp"

namespace {

struct CliOptions {
  sliceguard::RunManifest manifest;
  std::string exposure;     // "", "on", "off"
  std::string max_traffic;  // "", "on", "off"
  std::string bound_mode = "standard";
  std::string variable;
  std::vector<double> values;
  double w_cap = -1.0;    // sentinel: negative means not given
  double w_delay = -1.0;  // sentinel: negative means not given
};

void add_scenario_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--preset", opt.manifest.preset,
                  "Built-in scenario preset (paper-base, paper-nodecap, "
                  "paper-exposure-sweep, paper-maxtraffic-sweep)");
  cmd->add_option("--scenario", opt.manifest.scenario_path,
                  "Scenario JSON file");
  cmd->add_option("--seed", opt.manifest.seed,
                  "Seed for the scenario's service-rate draws");
}

void add_solver_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--time-limit", opt.manifest.time_limit,
                  "Solver budget in seconds (converted to a deterministic "
                  "search-node budget)");
  cmd->add_option("--solver", opt.manifest.solver,
                  "Solver: bnb, bruteforce, or greedy")
      ->check(CLI::IsMember({"bnb", "bruteforce", "greedy"}));
  cmd->add_option("--exposure", opt.exposure,
                  "Exposure protection on|off (default: scenario setting)")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--max-traffic", opt.max_traffic,
                  "Per-instance traffic limit on|off (default: scenario "
                  "setting)")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--w-cap", opt.w_cap, "Capacity weight in the objective")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--w-delay", opt.w_delay, "Delay weight in the objective")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", opt.manifest.out_dir, "Output directory");
  // Audit hooks, not part of the everyday surface.
  cmd->add_option("--bound-mode", opt.bound_mode,
                  "Pruning bound: standard, disabled, overestimate")
      ->check(CLI::IsMember({"standard", "disabled", "overestimate"}))
      ->group("");
  cmd->add_option("--nodes-per-second", opt.manifest.nodes_per_second,
                  "Budget conversion rate")
      ->check(CLI::PositiveNumber)
      ->group("");
  cmd->add_option("--node-budget", opt.manifest.node_budget,
                  "Explicit search-node budget (overrides --time-limit)")
      ->group("");
}

int finalize_manifest(CliOptions& opt) {
  auto& m = opt.manifest;
  if (opt.exposure == "on") m.exposure = true;
  if (opt.exposure == "off") m.exposure = false;
  if (opt.max_traffic == "on") m.max_traffic = true;
  if (opt.max_traffic == "off") m.max_traffic = false;
  if (opt.w_cap >= 0.0) m.w_cap = opt.w_cap;
  if (opt.w_delay >= 0.0) m.w_delay = opt.w_delay;
  if (opt.bound_mode == "disabled")
    m.bound_mode = sliceguard::BoundMode::disabled;
  else if (opt.bound_mode == "overestimate")
    m.bound_mode = sliceguard::BoundMode::overestimate;
  m.thread_cap = sliceguard::thread_cap_from_env();
  if (!m.preset.empty() && !m.scenario_path.empty())
    throw sliceguard::ParseError("--preset and --scenario are exclusive");
  return 0;
}

sliceguard::SweepSpec resolve_sweep(const CliOptions& opt) {
  using sliceguard::SweepSpec;
  if (opt.variable.empty()) {
    if (!opt.values.empty())
      throw sliceguard::ParseError("--values requires --variable");
    if (opt.manifest.preset.empty())
      throw sliceguard::ParseError(
          "sweeping a scenario file requires --variable");
    return sliceguard::default_sweep(opt.manifest.preset);
  }
  const auto var = sliceguard::sweep_variable_from(opt.variable);
  if (!var)
    throw sliceguard::ParseError(
        "unknown sweep variable: " + opt.variable +
        " (expected external_count, max_traffic_limit, or time_limit)");
  SweepSpec sweep;
  sweep.variable = *var;
  sweep.values = opt.values;
  if (sweep.values.empty()) {
    switch (sweep.variable) {
      case SweepSpec::Variable::external_count:
        sweep.values = {0, 1, 2, 3, 4};
        break;
      case SweepSpec::Variable::max_traffic_limit:
        sweep.values = {1, 2, 3, 4, 5};
        break;
      case SweepSpec::Variable::time_limit:
        throw sliceguard::ParseError(
            "a time_limit sweep needs explicit --values");
    }
  }
  return sweep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sliceguard: security-aware VNF placement for sliced 5G cores"};
  app.require_subcommand(1);

  CliOptions opt;
  auto* validate =
      app.add_subcommand("validate", "Check a scenario and list violations");
  add_scenario_options(validate, opt);

  auto* solve = app.add_subcommand(
      "solve", "Solve one scenario and write placement, report, and metrics");
  add_scenario_options(solve, opt);
  add_solver_options(solve, opt);

  auto* sweep = app.add_subcommand(
      "sweep", "Solve a family of scenario variants and combine the metrics");
  add_scenario_options(sweep, opt);
  add_solver_options(sweep, opt);
  sweep->add_option("--variable", opt.variable,
                    "Swept parameter: external_count, max_traffic_limit, "
                    "time_limit");
  sweep->add_option("--values", opt.values, "Sweep values")->delimiter(',');

  auto* oracle = app.add_subcommand(
      "oracle-check",
      "Run branch-and-bound against the exhaustive reference and compare");
  add_scenario_options(oracle, opt);
  add_solver_options(oracle, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sliceguard::exit_parse;
  }

  try {
    finalize_manifest(opt);
    if (validate->parsed())
      return sliceguard::run_validate(opt.manifest, std::cout, std::cerr);
    if (solve->parsed())
      return sliceguard::run_solve(opt.manifest, std::cout, std::cerr);
    if (sweep->parsed())
      return sliceguard::run_sweep(opt.manifest, resolve_sweep(opt),
                                   std::cout, std::cerr);
    if (oracle->parsed())
      return sliceguard::run_oracle_check(opt.manifest, std::cout, std::cerr);
    std::cerr << "no subcommand\n";
    return sliceguard::exit_parse;
  } catch (const sliceguard::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sliceguard::exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sliceguard::exit_parse;
  }
}
