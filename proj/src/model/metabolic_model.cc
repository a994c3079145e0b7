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

#include "fermko/model/metabolic_model.h"

#include <cmath>
#include <set>

namespace fermko::model {

std::string to_string(ReactionRole role) {
  switch (role) {
    case ReactionRole::kGeneric: return "generic";
    case ReactionRole::kBiomass: return "biomass";
    case ReactionRole::kSubstrateUptake: return "substrate_uptake";
    case ReactionRole::kProduct: return "product";
    case ReactionRole::kOxygenExchange: return "oxygen_exchange";
    case ReactionRole::kAtpm: return "atpm";
  }
  return "generic";
}

std::optional<ReactionRole> parse_role(const std::string& text) {
  static const std::map<std::string, ReactionRole> kNames = {
      {"generic", ReactionRole::kGeneric},
      {"", ReactionRole::kGeneric},
      {"biomass", ReactionRole::kBiomass},
      {"substrate_uptake", ReactionRole::kSubstrateUptake},
      {"substrate", ReactionRole::kSubstrateUptake},
      {"product", ReactionRole::kProduct},
      {"oxygen_exchange", ReactionRole::kOxygenExchange},
      {"oxygen", ReactionRole::kOxygenExchange},
      {"atpm", ReactionRole::kAtpm},
  };
  auto it = kNames.find(text);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

void MetabolicModel::reindex() {
  reaction_lookup_.clear();
  metabolite_lookup_.clear();
  for (int i = 0; i < num_reactions(); ++i) reaction_lookup_.emplace(reactions[i].id, i);
  for (int i = 0; i < num_metabolites(); ++i) metabolite_lookup_.emplace(metabolites[i].id, i);
}

// A stale index (edits without reindex()) falls back to a linear scan so
// shared const models are never mutated.
int MetabolicModel::reaction_index(const std::string& id) const {
  if (reaction_lookup_.size() == reactions.size()) {
    auto it = reaction_lookup_.find(id);
    if (it != reaction_lookup_.end() && reactions[it->second].id == id) return it->second;
  }
  for (int i = 0; i < num_reactions(); ++i) {
    if (reactions[i].id == id) return i;
  }
  return -1;
}

int MetabolicModel::metabolite_index(const std::string& id) const {
  if (metabolite_lookup_.size() == metabolites.size()) {
    auto it = metabolite_lookup_.find(id);
    if (it != metabolite_lookup_.end() && metabolites[it->second].id == id) return it->second;
  }
  for (int i = 0; i < num_metabolites(); ++i) {
    if (metabolites[i].id == id) return i;
  }
  return -1;
}

int MetabolicModel::role_reaction(ReactionRole role) const {
  for (int i = 0; i < num_reactions(); ++i) {
    if (reactions[i].role == role) return i;
  }
  return -1;
}

namespace {

bool is_exchange_like(const Reaction& r) {
  return r.id.rfind("EX_", 0) == 0 || r.role == ReactionRole::kSubstrateUptake ||
         r.role == ReactionRole::kProduct || r.role == ReactionRole::kOxygenExchange;
}

}  // namespace

std::vector<Diagnostic> validate_model(const MetabolicModel& model) {
  std::vector<Diagnostic> out;
  auto add = [&out](std::string invariant, std::string entity, std::string message) {
    out.push_back({std::move(invariant), std::move(entity), std::move(message)});
  };

  if (model.role_reaction(ReactionRole::kBiomass) < 0) {
    add("biomass_role", model.name, "missing biomass role");
  }
  if (model.reactions.empty()) add("reaction_count", model.name, "model has no reactions");

  std::set<std::string> metabolite_ids;
  for (const Metabolite& m : model.metabolites) {
    if (!metabolite_ids.insert(m.id).second) {
      add("unique_metabolite_id", m.id, "duplicate metabolite id '" + m.id + "'");
    }
  }
  std::set<std::string> reaction_ids;
  std::map<ReactionRole, std::string> role_owner;
  for (const Reaction& r : model.reactions) {
    if (!reaction_ids.insert(r.id).second) {
      add("unique_reaction_id", r.id, "duplicate reaction id '" + r.id + "'");
    }
    if (std::isnan(r.lower_bound) || std::isnan(r.upper_bound) || r.lower_bound > r.upper_bound) {
      add("bound_order", r.id, "reaction '" + r.id + "' has lower_bound > upper_bound");
    }
    if (r.stoichiometry.empty() && !is_exchange_like(r)) {
      add("stoichiometry_nonempty", r.id, "reaction '" + r.id + "' has no stoichiometry");
    }
    for (const auto& [met, coeff] : r.stoichiometry) {
      if (!metabolite_ids.count(met)) {
        add("metabolite_reference", r.id,
            "reaction '" + r.id + "' references unknown metabolite '" + met + "'");
      }
      if (!std::isfinite(coeff)) {
        add("finite_coefficient", r.id, "reaction '" + r.id + "' has a non-finite coefficient");
      }
    }
    if (r.role != ReactionRole::kGeneric) {
      auto [it, inserted] = role_owner.emplace(r.role, r.id);
      if (!inserted) {
        add("unique_role", r.id,
            "role " + to_string(r.role) + " assigned to both '" + it->second + "' and '" + r.id +
                "'");
      }
    }
  }
  return out;
}

}  // namespace fermko::model
