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

#ifndef FERMKO_MODEL_SPLIT_H_
#define FERMKO_MODEL_SPLIT_H_

#include <string>
#include <utility>
#include <vector>

#include "fermko/lp/linear_program.h"
#include "fermko/model/metabolic_model.h"

namespace fermko::model {

// Irreversible form: every column carries nonnegative flux.
struct IrreversibleNetwork {
  int m = 0;
  int n = 0;
  lp::SparseMatrix S;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<ReactionRole> column_roles;
  std::vector<std::string> column_ids;
  // True for columns carrying the negated parent direction.
  std::vector<bool> reversed;
  std::vector<int> role_columns;  // indexed by ReactionRole

  // Column that carries the role flux in its physical direction: uptake for
  // substrate and oxygen, secretion for product, forward otherwise. -1 when
  // the role is not assigned.
  int role_column(ReactionRole role) const;
  int column_index(const std::string& id) const;
};

// B: n x r with a single one per row, stored as the parent index per column.
struct ReversibleMap {
  int r = 0;
  std::vector<int> parent;

  int n() const { return static_cast<int>(parent.size()); }
  double b(int column, int reaction) const { return parent[column] == reaction ? 1.0 : 0.0; }
  // (B y)_j = y_parent(j).
  std::vector<double> apply(const std::vector<double>& y) const;
  // Irreversible columns of one reversible reaction (1 or 2 entries).
  std::vector<int> columns_of(int reaction) const;
};

std::pair<IrreversibleNetwork, ReversibleMap> split_reversible(const MetabolicModel& model);

}  // namespace fermko::model

#endif  // FERMKO_MODEL_SPLIT_H_
