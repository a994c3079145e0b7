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

#ifndef FERMKO_SIMULKNOCK_PROBLEM_H_
#define FERMKO_SIMULKNOCK_PROBLEM_H_

#include <memory>
#include <string>
#include <vector>

#include "fermko/chemostat/chemostat.h"
#include "fermko/kinetics/kinetics.h"
#include "fermko/simulknock/work_queue.h"
#include "fermko/strain/flux_context.h"

namespace fermko::simulknock {

struct SimulKnockProblem {
  std::shared_ptr<const strain::FluxContext> context;
  kinetics::KineticsSpec kinetics = kinetics::MichaelisMentenParams{};
  chemostat::ProcessSpec process;
  int max_knockouts = 1;
  // Applied on top of the search and not counted against max_knockouts.
  std::vector<int> fixed_knockouts;
  int threads = 1;
  double budget_seconds = 0.0;

  bool is_mm() const { return kinetics::kind_of(kinetics) == kinetics::KineticsKind::kMichaelisMenten; }
  const kinetics::MonodParams& monod() const { return std::get<kinetics::MonodParams>(kinetics); }
  const kinetics::MichaelisMentenParams& mm() const {
    return std::get<kinetics::MichaelisMentenParams>(kinetics);
  }
  // Candidates minus fixed knockouts.
  std::vector<int> search_candidates() const;
  // Throws std::invalid_argument on missing roles or bad parameters.
  void check() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kTimeout };
std::string to_string(SolveStatus status);

struct Certificates {
  double duality_gap = 0.0;
  bool duality_certified = false;
  bool aerobic = true;
  double best_bound = 0.0;  // equals sty unless timed out
};

struct SimulKnockSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<int> knockouts;  // reaction indices, ascending, fixed ones included
  std::vector<std::string> knockout_ids;
  double sty = 0.0;       // g/L/h
  double c_P = 0.0;       // g/L
  double c_S = 0.0;       // g/L
  double c_S_feed = 0.0;  // g/L
  double c_bio = 0.0;     // gDW/L
  double v_bio = 0.0;     // 1/h
  double v_S = 0.0;       // mmol/gDW/h
  double v_P = 0.0;
  double sigma = 0.0;     // MM only
  std::vector<double> v;  // irreversible flux vector
  Certificates certificates;
  SearchStats stats;
};

// Shared helpers for both solution routes.
double growth_floor(const SimulKnockProblem& p);
// Upper end of the uptake range allowed by kinetics, feed bound and the
// substrate column bound.
double max_uptake(const SimulKnockProblem& p);
// Fills concentrations and STY from fluxes and c_S; c_S_feed = c_S_feed_max.
void complete_process_state(const SimulKnockProblem& p, double c_S, SimulKnockSolution& s);

}  // namespace fermko::simulknock

#endif  // FERMKO_SIMULKNOCK_PROBLEM_H_
