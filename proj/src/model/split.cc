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

#include "fermko/model/split.h"

#include <tuple>

namespace fermko::model {
namespace {

constexpr int kRoleCount = 6;

// Sign of the net metabolite production of a column; exchange reactions have
// a single metabolite so this identifies the uptake direction.
double net_production(const Reaction& r, bool reversed) {
  double sum = 0.0;
  for (const auto& [met, coeff] : r.stoichiometry) sum += coeff;
  return reversed ? -sum : sum;
}

}  // namespace

int IrreversibleNetwork::role_column(ReactionRole role) const {
  const auto index = static_cast<std::size_t>(role);
  return index < role_columns.size() ? role_columns[index] : -1;
}

int IrreversibleNetwork::column_index(const std::string& id) const {
  for (int j = 0; j < n; ++j) {
    if (column_ids[j] == id) return j;
  }
  return -1;
}

std::vector<double> ReversibleMap::apply(const std::vector<double>& y) const {
  std::vector<double> out(parent.size());
  for (std::size_t j = 0; j < parent.size(); ++j) out[j] = y[parent[j]];
  return out;
}

std::vector<int> ReversibleMap::columns_of(int reaction) const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j) {
    if (parent[j] == reaction) out.push_back(j);
  }
  return out;
}

std::pair<IrreversibleNetwork, ReversibleMap> split_reversible(const MetabolicModel& model) {
  IrreversibleNetwork net;
  ReversibleMap map;
  net.m = model.num_metabolites();
  map.r = model.num_reactions();
  std::vector<std::tuple<int, int, double>> triplets;

  auto add_column = [&](int reaction, bool reversed, double lo, double hi) {
    const Reaction& r = model.reactions[reaction];
    const int col = static_cast<int>(net.lower.size());
    for (const auto& [met, coeff] : r.stoichiometry) {
      triplets.emplace_back(model.metabolite_index(met), col, reversed ? -coeff : coeff);
    }
    net.lower.push_back(lo);
    net.upper.push_back(hi);
    net.column_roles.push_back(r.role);
    net.column_ids.push_back(reversed ? r.id + "_b" : r.id);
    net.reversed.push_back(reversed);
    map.parent.push_back(reaction);
  };

  for (int i = 0; i < model.num_reactions(); ++i) {
    const Reaction& r = model.reactions[i];
    if (r.lower_bound < 0.0 && r.upper_bound > 0.0) {
      add_column(i, false, 0.0, r.upper_bound);
      add_column(i, true, 0.0, -r.lower_bound);
    } else if (r.lower_bound < 0.0) {
      // Only the backward direction can carry flux.
      add_column(i, true, -r.upper_bound, -r.lower_bound);
    } else {
      add_column(i, false, r.lower_bound, r.upper_bound);
    }
  }
  net.n = static_cast<int>(net.lower.size());
  net.S = lp::SparseMatrix::from_triplets(net.m, net.n, std::move(triplets));

  // Prefer the column running in the role's physical direction; a lone
  // column running the other way is still reported.
  net.role_columns.assign(kRoleCount, -1);
  for (int j = 0; j < net.n; ++j) {
    const ReactionRole role = net.column_roles[j];
    if (role == ReactionRole::kGeneric) continue;
    const double production = net_production(model.reactions[map.parent[j]], net.reversed[j]);
    bool physical = !net.reversed[j];
    if (role == ReactionRole::kSubstrateUptake || role == ReactionRole::kOxygenExchange) {
      physical = production > 0.0;
    } else if (role == ReactionRole::kProduct) {
      physical = production < 0.0;
    }
    int& slot = net.role_columns[static_cast<std::size_t>(role)];
    if (slot < 0 || physical) slot = j;
  }
  return {std::move(net), std::move(map)};
}

}  // namespace fermko::model
