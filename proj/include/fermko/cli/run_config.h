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

#ifndef FERMKO_CLI_RUN_CONFIG_H_
#define FERMKO_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermko/kinetics/kinetics.h"
#include "fermko/model/model_io.h"

namespace fermko::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kFba, kOptKnock, kSequential, kSimulKnock };
enum class Aeration { kOn, kOff, kBoth };
enum class ReportFormat { kCsv, kTable, kPlotData };

std::string to_string(Command c);
std::string to_string(Aeration a);
std::string to_string(ReportFormat f);
Command parse_command(const std::string& text);
Aeration parse_aeration(const std::string& text);
ReportFormat parse_report_format(const std::string& text);

struct ParameterOverrides {
  std::optional<double> K_S;
  std::optional<double> v_bio_max;
  std::optional<double> K_S_MM;
  std::optional<double> v_S_max;
  std::optional<double> f;
  std::optional<double> atpm_floor;
  std::optional<double> glucose_ub;
  std::optional<double> c_S_feed_max;
  std::optional<double> M_S;
  std::optional<double> M_P;

  // "name=value"; throws ConfigError on unknown names or bad numbers.
  void set(const std::string& assignment);
  void set(const std::string& name, double value);
  // Fields present in `other` replace ours.
  void merge(const ParameterOverrides& other);
};

struct RunConfig {
  std::string model_path;
  model::ModelFormat format = model::ModelFormat::kNativeJson;
  std::optional<Command> command;
  kinetics::KineticsKind kinetics = kinetics::KineticsKind::kMichaelisMenten;
  int max_knockouts = 1;
  std::string target;     // product reaction id
  std::string chemical;   // label for reports; defaults to target
  std::string substrate;  // role overrides, empty keeps the model's roles
  std::string oxygen;
  std::string atpm;
  std::vector<std::string> protected_reactions;
  Aeration aerobic = Aeration::kOn;
  ParameterOverrides params;
  std::uint64_t seed = 0;
  double budget_seconds = 0.0;
  int threads = 1;
  ReportFormat report = ReportFormat::kCsv;
  std::string out_path;    // empty writes to stdout
  std::string export_lp;   // single-level program export path

  // Throws ConfigError.
  void validate() const;
  std::string chemical_label() const { return chemical.empty() ? target : chemical; }
};

// Reads a JSON config file. Unknown keys are rejected.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

}  // namespace fermko::cli

#endif  // FERMKO_CLI_RUN_CONFIG_H_
