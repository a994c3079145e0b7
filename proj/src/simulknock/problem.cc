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

#include "fermko/simulknock/problem.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fermko/lp/simplex.h"

namespace fermko::simulknock {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

std::vector<int> SimulKnockProblem::search_candidates() const {
  std::vector<int> out;
  for (int c : context->candidates()) {
    if (std::find(fixed_knockouts.begin(), fixed_knockouts.end(), c) == fixed_knockouts.end()) {
      out.push_back(c);
    }
  }
  return out;
}

void SimulKnockProblem::check() const {
  if (!context) throw std::invalid_argument("problem has no network");
  if (context->substrate_col() < 0) throw std::invalid_argument("missing substrate_uptake role");
  if (context->product_col() < 0) throw std::invalid_argument("missing product role");
  if (max_knockouts < 0) throw std::invalid_argument("max_knockouts must be >= 0");
  process.check();
  if (is_mm()) {
    mm().check();
  } else {
    monod().check();
  }
  for (int k : fixed_knockouts) {
    if (k < 0 || k >= context->map().r) throw std::invalid_argument("fixed knockout out of range");
  }
}

double growth_floor(const SimulKnockProblem& p) {
  const lp::LpSolution wt = lp::solve_lp(p.context->fba_problem());
  // An infeasible wild type leaves nothing to optimize.
  if (wt.status != lp::LpStatus::kOptimal) return std::numeric_limits<double>::infinity();
  return p.process.f * wt.objective;
}

double max_uptake(const SimulKnockProblem& p) {
  const double ub = p.context->net().upper[p.context->substrate_col()];
  if (!p.is_mm()) return ub;
  const auto& k = p.mm();
  const double c_f = p.process.c_S_feed_max;
  return std::min(ub, kinetics::mm_uptake(c_f, k));
}

void complete_process_state(const SimulKnockProblem& p, double c_S, SimulKnockSolution& s) {
  s.c_S = c_S;
  s.c_S_feed = p.process.c_S_feed_max;
  const chemostat::Concentrations c = chemostat::steady_state_concentrations(
      s.v_bio, s.v_S, s.v_P, s.c_S, s.c_S_feed, p.process);
  s.c_bio = c.c_bio;
  s.c_P = c.c_P;
  s.sty = chemostat::space_time_yield(s.c_P, s.v_bio);
}

}  // namespace fermko::simulknock
