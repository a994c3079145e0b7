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

#ifndef FERMKO_MODEL_METABOLIC_MODEL_H_
#define FERMKO_MODEL_METABOLIC_MODEL_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fermko::model {

enum class ReactionRole { kGeneric, kBiomass, kSubstrateUptake, kProduct, kOxygenExchange, kAtpm };

std::string to_string(ReactionRole role);
// Accepts the names written by to_string plus "substrate" and "oxygen".
std::optional<ReactionRole> parse_role(const std::string& text);

struct Metabolite {
  std::string id;
  std::string name;
  std::string compartment;
};

struct Reaction {
  std::string id;
  std::string name;
  std::map<std::string, double> stoichiometry;
  double lower_bound = 0.0;  // mmol/gDW/h
  double upper_bound = 0.0;
  ReactionRole role = ReactionRole::kGeneric;
};

class MetabolicModel {
 public:
  std::string name;
  std::vector<Metabolite> metabolites;
  std::vector<Reaction> reactions;

  int num_reactions() const { return static_cast<int>(reactions.size()); }
  int num_metabolites() const { return static_cast<int>(metabolites.size()); }

  // Index lookups; -1 when absent. Call reindex() after editing the lists.
  int reaction_index(const std::string& id) const;
  int metabolite_index(const std::string& id) const;
  // First reaction carrying the role, or -1.
  int role_reaction(ReactionRole role) const;
  void reindex();

 private:
  std::unordered_map<std::string, int> reaction_lookup_;
  std::unordered_map<std::string, int> metabolite_lookup_;
};

struct Diagnostic {
  std::string invariant;
  std::string entity;
  std::string message;
};

std::vector<Diagnostic> validate_model(const MetabolicModel& model);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fermko::model

#endif  // FERMKO_MODEL_METABOLIC_MODEL_H_
