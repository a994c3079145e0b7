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

#include "fermko/strain/flux_context.h"

#include <algorithm>
#include <set>

namespace fermko::strain {

using model::ReactionRole;

FluxContext::FluxContext(const model::MetabolicModel& model, const NetworkOptions& options)
    : model_(model), options_(options) {
  model_.reindex();
  auto [net, map] = model::split_reversible(model_);
  net_ = std::move(net);
  map_ = std::move(map);
  columns_.resize(map_.r);
  for (int j = 0; j < net_.n; ++j) columns_[map_.parent[j]].push_back(j);
  biomass_col_ = net_.role_column(ReactionRole::kBiomass);
  substrate_col_ = net_.role_column(ReactionRole::kSubstrateUptake);
  product_col_ = net_.role_column(ReactionRole::kProduct);
  oxygen_col_ = net_.role_column(ReactionRole::kOxygenExchange);
  atpm_col_ = net_.role_column(ReactionRole::kAtpm);
  if (biomass_col_ < 0) throw model::ModelError("missing biomass role");

  if (options_.substrate_uptake_max && substrate_col_ >= 0) {
    net_.upper[substrate_col_] = *options_.substrate_uptake_max;
  }
  if (!options_.aerobic && oxygen_col_ >= 0) {
    // Closes uptake only; the column pair of a reversible exchange keeps its
    // secretion direction.
    net_.upper[oxygen_col_] = 0.0;
    net_.lower[oxygen_col_] = 0.0;
  }
  if (options_.atpm_floor && atpm_col_ >= 0) {
    net_.lower[atpm_col_] = *options_.atpm_floor;
    net_.upper[atpm_col_] = std::max(net_.upper[atpm_col_], *options_.atpm_floor);
  }

  std::set<int> protect;
  for (ReactionRole role : {ReactionRole::kBiomass, ReactionRole::kSubstrateUptake,
                            ReactionRole::kProduct, ReactionRole::kOxygenExchange,
                            ReactionRole::kAtpm}) {
    const int index = model_.role_reaction(role);
    if (index >= 0) protect.insert(index);
  }
  for (const std::string& id : options_.extra_protected) {
    const int index = model_.reaction_index(id);
    if (index < 0) throw model::ModelError("protected reaction '" + id + "' not in model");
    protect.insert(index);
  }
  for (int i = 0; i < model_.num_reactions(); ++i) {
    if (!protect.count(i)) candidates_.push_back(i);
  }
}

std::vector<double> FluxContext::knockout_vector(const std::vector<int>& knocked) const {
  std::vector<double> y(model_.num_reactions(), 1.0);
  for (int i : knocked) y[i] = 0.0;
  return y;
}

lp::LpProblem FluxContext::fba_problem() const {
  lp::LpProblem p;
  p.sense = lp::Sense::kMaximize;
  p.matrix = net_.S;
  p.objective.assign(net_.n, 0.0);
  p.objective[biomass_col_] = 1.0;
  p.col_lower = net_.lower;
  p.col_upper = net_.upper;
  p.row_lower.assign(net_.m, 0.0);
  p.row_upper.assign(net_.m, 0.0);
  p.col_names = net_.column_ids;
  for (const auto& met : model_.metabolites) p.row_names.push_back(met.id);
  return p;
}

lp::CanonicalLp FluxContext::inner_lp(bool with_kinetic_row, double v_S_max) const {
  lp::InnerLpSpec spec;
  spec.S = &net_.S;
  spec.lower = net_.lower;
  spec.upper = net_.upper;
  spec.parent = map_.parent;
  spec.num_reactions = map_.r;
  spec.objective.assign(net_.n, 0.0);
  spec.objective[biomass_col_] = 1.0;
  if (with_kinetic_row) {
    if (substrate_col_ < 0) throw model::ModelError("missing substrate_uptake role");
    spec.kinetic_col = substrate_col_;
    spec.kinetic_scale = v_S_max;
  }
  return lp::build_inner_lp(spec);
}

void FluxContext::knock_out(lp::SimplexSolver& solver, const std::vector<int>& knocked) const {
  for (int i : knocked) {
    for (int j : columns_[i]) solver.set_col_bounds(j, 0.0, 0.0);
  }
}

void FluxContext::restore_columns(lp::SimplexSolver& solver, const std::vector<int>& knocked) const {
  for (int i : knocked) {
    for (int j : columns_[i]) solver.set_col_bounds(j, net_.lower[j], net_.upper[j]);
  }
}

}  // namespace fermko::strain
