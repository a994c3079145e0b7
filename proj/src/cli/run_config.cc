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

#include "fermko/cli/run_config.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fermko::cli {
namespace {

using Json = nlohmann::json;

template <class Enum>
Enum parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, Enum>> table,
                const char* what) {
  for (const auto& [name, value] : table) {
    if (text == name) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : table) allowed += allowed.empty() ? name : std::string("|") + name;
  throw ConfigError(std::string("invalid ") + what + " '" + text + "' (expected " + allowed + ")");
}

double parse_number(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw ConfigError("parameter " + name + " needs a finite number, got '" + text + "'");
  }
  return value;
}

std::string get_string(const Json& j, const char* key) {
  if (!j.is_string()) throw ConfigError(std::string("config key '") + key + "' must be a string");
  return j.get<std::string>();
}

double get_number(const Json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return j.get<double>();
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::kFba: return "fba";
    case Command::kOptKnock: return "optknock";
    case Command::kSequential: return "sequential";
    case Command::kSimulKnock: return "simulknock";
  }
  return "unknown";
}

std::string to_string(Aeration a) {
  switch (a) {
    case Aeration::kOn: return "on";
    case Aeration::kOff: return "off";
    case Aeration::kBoth: return "both";
  }
  return "unknown";
}

std::string to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kTable: return "table";
    case ReportFormat::kPlotData: return "plot-data";
  }
  return "unknown";
}

Command parse_command(const std::string& text) {
  return parse_enum<Command>(text,
                             {{"fba", Command::kFba},
                              {"optknock", Command::kOptKnock},
                              {"sequential", Command::kSequential},
                              {"simulknock", Command::kSimulKnock}},
                             "command");
}

Aeration parse_aeration(const std::string& text) {
  return parse_enum<Aeration>(text, {{"on", Aeration::kOn}, {"off", Aeration::kOff}, {"both", Aeration::kBoth}},
                              "aerobic setting");
}

ReportFormat parse_report_format(const std::string& text) {
  return parse_enum<ReportFormat>(
      text, {{"csv", ReportFormat::kCsv},
             {"table", ReportFormat::kTable},
             {"pretty-table", ReportFormat::kTable},
             {"plot-data", ReportFormat::kPlotData}},
      "report format");
}

void ParameterOverrides::set(const std::string& name, double value) {
  if (name == "K_S") K_S = value;
  else if (name == "v_bio_max") v_bio_max = value;
  else if (name == "K_S_MM") K_S_MM = value;
  else if (name == "v_S_max") v_S_max = value;
  else if (name == "f") f = value;
  else if (name == "atpm_floor") atpm_floor = value;
  else if (name == "glucose_ub") glucose_ub = value;
  else if (name == "c_S_feed_max") c_S_feed_max = value;
  else if (name == "M_S") M_S = value;
  else if (name == "M_P") M_P = value;
  else throw ConfigError("unknown parameter '" + name + "'");
}

void ParameterOverrides::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("parameter override must look like name=value, got '" + assignment + "'");
  }
  const std::string name = assignment.substr(0, eq);
  set(name, parse_number(assignment.substr(eq + 1), name));
}

void ParameterOverrides::merge(const ParameterOverrides& o) {
  for (auto [mine, theirs] : {std::pair{&K_S, &o.K_S}, {&v_bio_max, &o.v_bio_max}, {&K_S_MM, &o.K_S_MM},
                              {&v_S_max, &o.v_S_max}, {&f, &o.f}, {&atpm_floor, &o.atpm_floor},
                              {&glucose_ub, &o.glucose_ub}, {&c_S_feed_max, &o.c_S_feed_max},
                              {&M_S, &o.M_S}, {&M_P, &o.M_P}}) {
    if (theirs->has_value()) *mine = *theirs;
  }
}

void RunConfig::validate() const {
  if (!command) throw ConfigError("no command given");
  if (model_path.empty()) throw ConfigError("--model is required");
  if (*command != Command::kFba && target.empty()) {
    throw ConfigError("--target is required for " + to_string(*command));
  }
  if (max_knockouts < 0) throw ConfigError("--max-knockouts must be >= 0");
  if (budget_seconds < 0) throw ConfigError("--budget must be >= 0");
  if (threads < 0) throw ConfigError("--threads must be >= 0");
  auto positive = [](const std::optional<double>& v, const char* name) {
    if (v && !(*v > 0)) throw ConfigError(std::string(name) + " must be > 0");
  };
  positive(params.K_S, "K_S");
  positive(params.v_bio_max, "v_bio_max");
  positive(params.K_S_MM, "K_S_MM");
  positive(params.v_S_max, "v_S_max");
  positive(params.c_S_feed_max, "c_S_feed_max");
  positive(params.M_S, "M_S");
  positive(params.M_P, "M_P");
  if (params.f && (!(*params.f > 0) || *params.f > 1)) throw ConfigError("f must be in (0, 1]");
  if (params.glucose_ub && *params.glucose_ub < 0) throw ConfigError("glucose_ub must be >= 0");
  if (params.atpm_floor && *params.atpm_floor < 0) throw ConfigError("atpm_floor must be >= 0");
}

RunConfig parse_config(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  RunConfig c;
  for (const auto& [key, value] : root.items()) {
    if (key == "model" || key == "model_path") c.model_path = get_string(value, "model");
    else if (key == "format") {
      try {
        c.format = model::parse_model_format(get_string(value, "format"));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "command") c.command = parse_command(get_string(value, "command"));
    else if (key == "kinetics") {
      try {
        c.kinetics = kinetics::parse_kinetics(get_string(value, "kinetics"));
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "max_knockouts" || key == "K") {
      if (!value.is_number_integer()) throw ConfigError("max_knockouts must be an integer");
      c.max_knockouts = value.get<int>();
    } else if (key == "target") c.target = get_string(value, "target");
    else if (key == "chemical") c.chemical = get_string(value, "chemical");
    else if (key == "substrate") c.substrate = get_string(value, "substrate");
    else if (key == "oxygen") c.oxygen = get_string(value, "oxygen");
    else if (key == "atpm") c.atpm = get_string(value, "atpm");
    else if (key == "protected") {
      if (!value.is_array()) throw ConfigError("protected must be an array of reaction ids");
      for (const auto& id : value) c.protected_reactions.push_back(get_string(id, "protected"));
    } else if (key == "aerobic") c.aerobic = parse_aeration(get_string(value, "aerobic"));
    else if (key == "parameters") {
      if (!value.is_object()) throw ConfigError("parameters must be an object");
      for (const auto& [name, v] : value.items()) c.params.set(name, get_number(v, name));
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "budget") c.budget_seconds = get_number(value, key);
    else if (key == "threads") {
      if (!value.is_number_integer()) throw ConfigError("threads must be an integer");
      c.threads = value.get<int>();
    } else if (key == "report") c.report = parse_report_format(get_string(value, "report"));
    else if (key == "out") c.out_path = get_string(value, "out");
    else if (key == "export_lp") c.export_lp = get_string(value, "export_lp");
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunConfig c = parse_config(buffer.str());
  // Relative paths inside a config file are relative to that file.
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  for (std::string* p : {&c.model_path, &c.out_path, &c.export_lp}) {
    if (!p->empty() && std::filesystem::path(*p).is_relative()) *p = (base / *p).lexically_normal().string();
  }
  return c;
}

}  // namespace fermko::cli
