// Copyright 2026 The fermko Authors
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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermko/cli/runner.h"

using fermko::cli::ConfigError;
using fermko::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Co-optimization of chemostat conditions and reaction knockouts"};
  app.set_version_flag("--version", "fermko 1.0.0");

  std::string command, model, format, target, chemical, kinetics, aerobic, config_path, out, report;
  std::string substrate, oxygen, atpm, export_lp;
  std::vector<std::string> params, protect;
  int max_knockouts = 1, threads = 1;
  double budget = 0.0;
  unsigned long long seed = 0;

  app.add_option("command", command, "fba | optknock | sequential | simulknock")->required();
  auto* o_model = app.add_option("--model", model, "Model file");
  auto* o_format = app.add_option("--format", format, "cobra-json | native-json");
  auto* o_target = app.add_option("--target", target, "Product exchange reaction id");
  auto* o_chemical = app.add_option("--chemical", chemical, "Label used in reports (default: target)");
  auto* o_kinetics = app.add_option("--kinetics", kinetics, "monod | mm");
  auto* o_k = app.add_option("--max-knockouts,-K", max_knockouts, "Knockout budget");
  auto* o_aerobic = app.add_option("--aerobic", aerobic, "on | off | both");
  app.add_option("--config", config_path, "JSON run configuration; flags win over it");
  auto* o_out = app.add_option("--out", out, "Output file (default: stdout)");
  auto* o_report = app.add_option("--report", report, "csv | table | plot-data");
  auto* o_budget = app.add_option("--budget", budget, "Wall-clock budget in seconds (0: none)");
  auto* o_threads = app.add_option("--threads", threads, "Worker threads (0: all cores)");
  auto* o_param = app.add_option("--param", params, "Parameter override name=value (repeatable)");
  auto* o_substrate = app.add_option("--substrate", substrate, "Substrate uptake reaction id");
  auto* o_oxygen = app.add_option("--oxygen", oxygen, "Oxygen exchange reaction id");
  auto* o_atpm = app.add_option("--atpm", atpm, "ATP maintenance reaction id");
  auto* o_protect = app.add_option("--protect", protect, "Reaction never knocked out (repeatable)");
  auto* o_seed = app.add_option("--seed", seed, "Recorded seed (runs are deterministic)");
  auto* o_export = app.add_option("--export-lp", export_lp, "Write the single-level program in LP format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fermko::cli::kExitConfig;
  }

  RunConfig c;
  try {
    if (!config_path.empty()) c = fermko::cli::load_config(config_path);
    c.command = fermko::cli::parse_command(command);
    if (*o_model) c.model_path = model;
    if (*o_format) {
      try {
        c.format = fermko::model::parse_model_format(format);
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    }
    if (*o_target) c.target = target;
    if (*o_chemical) c.chemical = chemical;
    if (*o_kinetics) {
      try {
        c.kinetics = fermko::kinetics::parse_kinetics(kinetics);
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    }
    if (*o_k) c.max_knockouts = max_knockouts;
    if (*o_aerobic) c.aerobic = fermko::cli::parse_aeration(aerobic);
    if (*o_out) c.out_path = out;
    if (*o_report) c.report = fermko::cli::parse_report_format(report);
    if (*o_budget) c.budget_seconds = budget;
    if (*o_threads) c.threads = threads;
    for (const auto& p : params) c.params.set(p);
    if (*o_substrate) c.substrate = substrate;
    if (*o_oxygen) c.oxygen = oxygen;
    if (*o_atpm) c.atpm = atpm;
    if (*o_protect) c.protected_reactions = protect;
    if (*o_seed) c.seed = seed;
    if (*o_export) c.export_lp = export_lp;
    (void)o_param;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return fermko::cli::kExitConfig;
  }
  return fermko::cli::run_and_report(c, std::cout, std::cerr);
}
