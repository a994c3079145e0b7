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

#ifndef FERMKO_STRAIN_STRAIN_OPT_H_
#define FERMKO_STRAIN_STRAIN_OPT_H_

#include <string>
#include <vector>

#include "fermko/lp/simplex.h"
#include "fermko/simulknock/problem.h"
#include "fermko/strain/flux_context.h"

namespace fermko::strain {

// Maximizes the flux of column `objective_col` over the network.
lp::LpSolution fba(const FluxContext& ctx, int objective_col);
lp::LpSolution fba(const FluxContext& ctx, const std::string& reaction_id);

// f times the wild-type growth; throws std::runtime_error when the wild type
// is infeasible.
double wild_type_threshold(const FluxContext& ctx, double f);

enum class StrainStatus { kOptimal, kInfeasible, kTimeout };

struct StrainSolution {
  StrainStatus status = StrainStatus::kInfeasible;
  std::vector<int> knockouts;  // reaction indices, ascending
  std::vector<std::string> knockout_ids;
  std::vector<double> v;
  double v_bio = 0.0;
  double v_S = 0.0;
  double v_P = 0.0;
  simulknock::SearchStats stats;
};

struct OptKnockOptions {
  int max_knockouts = 1;
  double f = 0.1;  // growth floor fraction
  int threads = 1;
  double budget_seconds = 0.0;
};

// Maximal product flux among inner growth-optimal fluxes (optimistic), over
// knockout sets of size <= K. Ties resolve to the lexicographically smallest
// set.
StrainSolution optknock(const FluxContext& ctx, const OptKnockOptions& options);

struct SequentialResult {
  StrainSolution strain;
  simulknock::SimulKnockSolution process;
  // "optknock" or "process" when that stage failed, empty on success.
  std::string failed_stage;
};

// OptKnock first; then the process program with those knockouts frozen.
SequentialResult sequential_optimize(const simulknock::SimulKnockProblem& problem);

}  // namespace fermko::strain

#endif  // FERMKO_STRAIN_STRAIN_OPT_H_
