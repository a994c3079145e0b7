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

#ifndef FERMKO_STRAIN_FLUX_CONTEXT_H_
#define FERMKO_STRAIN_FLUX_CONTEXT_H_

#include <optional>
#include <string>
#include <vector>

#include "fermko/lp/inner_lp.h"
#include "fermko/lp/linear_program.h"
#include "fermko/lp/simplex.h"
#include "fermko/model/metabolic_model.h"
#include "fermko/model/split.h"

namespace fermko::strain {

struct NetworkOptions {
  std::optional<double> substrate_uptake_max;  // e.g. glucose_ub
  std::optional<double> atpm_floor;
  bool aerobic = true;
  // Reaction ids never knocked out, on top of the role reactions.
  std::vector<std::string> extra_protected;
};

// Split network with roles resolved and run-level bounds applied. Immutable
// once built; shared read-only by solver workers.
class FluxContext {
 public:
  FluxContext(const model::MetabolicModel& model, const NetworkOptions& options);

  const model::MetabolicModel& model() const { return model_; }
  const model::IrreversibleNetwork& net() const { return net_; }
  const model::ReversibleMap& map() const { return map_; }
  const NetworkOptions& options() const { return options_; }

  int biomass_col() const { return biomass_col_; }
  int substrate_col() const { return substrate_col_; }
  int product_col() const { return product_col_; }  // -1 without a product role
  int oxygen_col() const { return oxygen_col_; }
  int atpm_col() const { return atpm_col_; }

  // Reversible reaction indices eligible for knockout, ascending.
  const std::vector<int>& candidates() const { return candidates_; }
  const std::string& reaction_id(int reaction) const { return model_.reactions[reaction].id; }
  const std::vector<int>& columns_of(int reaction) const { return columns_[reaction]; }

  // y with zeros at the given reaction indices.
  std::vector<double> knockout_vector(const std::vector<int>& knocked) const;

  // max v_bio over S v = 0 and the column bounds.
  lp::LpProblem fba_problem() const;
  // Canonical inner LP; with_kinetic_row adds v_S <= v_S_max * sigma.
  lp::CanonicalLp inner_lp(bool with_kinetic_row, double v_S_max) const;

  // Zeroes the bounds of every column of the knocked reactions; restore with
  // the original bounds through restore_columns.
  void knock_out(lp::SimplexSolver& solver, const std::vector<int>& knocked) const;
  void restore_columns(lp::SimplexSolver& solver, const std::vector<int>& knocked) const;

 private:
  model::MetabolicModel model_;
  NetworkOptions options_;
  model::IrreversibleNetwork net_;
  model::ReversibleMap map_;
  int biomass_col_ = -1;
  int substrate_col_ = -1;
  int product_col_ = -1;
  int oxygen_col_ = -1;
  int atpm_col_ = -1;
  std::vector<int> candidates_;
  std::vector<std::vector<int>> columns_;
};

}  // namespace fermko::strain

#endif  // FERMKO_STRAIN_FLUX_CONTEXT_H_
