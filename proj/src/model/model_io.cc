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

#include "fermko/model/model_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fermko::model {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kNativeSchemaVersion = 1;

double number_or(const Json& node, const char* key, double fallback) {
  auto it = node.find(key);
  if (it == node.end() || it->is_null()) return fallback;
  if (!it->is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::string string_or(const Json& node, const char* key, const std::string& fallback = "") {
  auto it = node.find(key);
  if (it == node.end() || it->is_null()) return fallback;
  if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

const Json& require_array(const Json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end() || !it->is_array()) {
    throw ParseError(std::string("missing array '") + key + "'");
  }
  return *it;
}

std::map<std::string, double> read_stoichiometry(const Json& node, const std::string& owner) {
  std::map<std::string, double> out;
  if (node.is_null()) return out;
  if (!node.is_object()) throw ParseError("stoichiometry of '" + owner + "' must be an object");
  for (const auto& [met, coeff] : node.items()) {
    if (!coeff.is_number()) {
      throw ParseError("coefficient of '" + met + "' in '" + owner + "' must be a number");
    }
    out[met] += coeff.get<double>();
  }
  return out;
}

Metabolite read_metabolite(const Json& node) {
  if (!node.is_object()) throw ParseError("metabolite entries must be objects");
  Metabolite m;
  m.id = string_or(node, "id");
  if (m.id.empty()) throw ParseError("metabolite without id");
  m.name = string_or(node, "name", m.id);
  m.compartment = string_or(node, "compartment");
  return m;
}

MetabolicModel read_native(const Json& root) {
  MetabolicModel model;
  if (root.contains("format_version")) {
    const Json& v = root["format_version"];
    if (!v.is_number_integer() || v.get<int>() > kNativeSchemaVersion) {
      throw ParseError("unsupported native schema version");
    }
  }
  model.name = string_or(root, "name");
  for (const Json& node : require_array(root, "metabolites")) {
    model.metabolites.push_back(read_metabolite(node));
  }
  for (const Json& node : require_array(root, "reactions")) {
    if (!node.is_object()) throw ParseError("reaction entries must be objects");
    Reaction r;
    r.id = string_or(node, "id");
    if (r.id.empty()) throw ParseError("reaction without id");
    r.name = string_or(node, "name", r.id);
    r.stoichiometry = read_stoichiometry(node.value("stoichiometry", Json()), r.id);
    r.lower_bound = number_or(node, "lb", 0.0);
    r.upper_bound = number_or(node, "ub", 1000.0);
    const std::string role = string_or(node, "role", "generic");
    auto parsed = parse_role(role);
    if (!parsed) throw ParseError("reaction '" + r.id + "' has unknown role '" + role + "'");
    r.role = *parsed;
    model.reactions.push_back(std::move(r));
  }
  return model;
}

MetabolicModel read_cobra(const Json& root) {
  MetabolicModel model;
  model.name = string_or(root, "id", string_or(root, "name"));
  for (const Json& node : require_array(root, "metabolites")) {
    model.metabolites.push_back(read_metabolite(node));
  }
  for (const Json& node : require_array(root, "reactions")) {
    if (!node.is_object()) throw ParseError("reaction entries must be objects");
    Reaction r;
    r.id = string_or(node, "id");
    if (r.id.empty()) throw ParseError("reaction without id");
    r.name = string_or(node, "name", r.id);
    r.stoichiometry = read_stoichiometry(node.value("metabolites", Json()), r.id);
    r.lower_bound = number_or(node, "lower_bound", -1000.0);
    r.upper_bound = number_or(node, "upper_bound", 1000.0);
    // COBRA files mark the growth reaction through the objective.
    if (number_or(node, "objective_coefficient", 0.0) != 0.0) r.role = ReactionRole::kBiomass;
    model.reactions.push_back(std::move(r));
  }
  return model;
}

void apply_overrides(MetabolicModel& model, const RoleOverrides& overrides) {
  for (const auto& [role, id] : overrides) {
    if (id.empty()) continue;
    const int index = model.reaction_index(id);
    if (index < 0) {
      throw ModelError("role " + to_string(role) + " names unknown reaction '" + id + "'");
    }
    for (Reaction& r : model.reactions) {
      if (r.role == role) r.role = ReactionRole::kGeneric;
    }
    model.reactions[index].role = role;
  }
}

}  // namespace

std::string to_string(ModelFormat format) {
  return format == ModelFormat::kCobraJson ? "cobra-json" : "native-json";
}

ModelFormat parse_model_format(const std::string& text) {
  if (text == "cobra-json") return ModelFormat::kCobraJson;
  if (text == "native-json") return ModelFormat::kNativeJson;
  throw std::invalid_argument("unknown model format '" + text + "'");
}

MetabolicModel parse_model(const std::string& text, ModelFormat format,
                           const RoleOverrides& overrides) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("model root must be a JSON object");
  MetabolicModel model = format == ModelFormat::kCobraJson ? read_cobra(root) : read_native(root);
  model.reindex();
  apply_overrides(model, overrides);

  const std::vector<Diagnostic> diagnostics = validate_model(model);
  if (!diagnostics.empty()) {
    std::string message = diagnostics.front().message;
    for (std::size_t i = 1; i < diagnostics.size(); ++i) message += "; " + diagnostics[i].message;
    throw ModelError(message);
  }
  return model;
}

MetabolicModel load_model(const std::string& path, ModelFormat format,
                          const RoleOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), format, overrides);
}

std::string to_native_json(const MetabolicModel& model) {
  Json root;
  root["format_version"] = kNativeSchemaVersion;
  root["name"] = model.name;
  root["metabolites"] = Json::array();
  for (const Metabolite& m : model.metabolites) {
    root["metabolites"].push_back({{"id", m.id}, {"name", m.name}, {"compartment", m.compartment}});
  }
  root["reactions"] = Json::array();
  for (const Reaction& r : model.reactions) {
    Json stoich = Json::object();
    for (const auto& [met, coeff] : r.stoichiometry) stoich[met] = coeff;
    root["reactions"].push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"stoichiometry", stoich},
                                 {"lb", r.lower_bound},
                                 {"ub", r.upper_bound},
                                 {"role", to_string(r.role)}});
  }
  return root.dump(2) + "\n";
}

}  // namespace fermko::model
