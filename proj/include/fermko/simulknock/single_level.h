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

#ifndef FERMKO_SIMULKNOCK_SINGLE_LEVEL_H_
#define FERMKO_SIMULKNOCK_SINGLE_LEVEL_H_

#include <string>
#include <vector>

#include "fermko/lp/inner_lp.h"
#include "fermko/lp/lp_writer.h"
#include "fermko/simulknock/problem.h"

namespace fermko::simulknock {

// The strong-duality single-level program as an explicit MIQCQP. Index
// vectors map problem quantities to model variables; -1 marks an absent
// variable (sigma under Monod).
struct SingleLevelProgram {
  lp::QuadraticModel model;
  lp::CanonicalLp inner;
  std::vector<int> y;       // per reaction
  std::vector<int> v;       // per irreversible column
  std::vector<int> lambda;  // per metabolite
  std::vector<int> mu;      // per inequality row of the inner LP
  int c_S = -1;
  int c_S_feed = -1;
  int sigma = -1;
  int c_bio = -1;
  int c_P = -1;
  double growth_floor = 0.0;

  int num_binaries() const { return static_cast<int>(y.size()); }
  int num_rows() const { return static_cast<int>(model.rows.size()); }
};

// Rows: cardinality, substrate and product balances, kinetic rows (MM:
// uptake = v_S_max sigma and sigma (c_S + K) = c_S; Monod: c_S clearing),
// strong duality, mass balance, inner inequalities, stationarity and growth
// floor. Objective c_P * v_bio.
SingleLevelProgram assemble_single_level(const SimulKnockProblem& problem);

// Variable vector for a solved instance. Duals come from a fresh inner solve
// at the solution's knockouts and sigma.
std::vector<double> embed_solution(const SingleLevelProgram& program,
                                   const SimulKnockProblem& problem,
                                   const SimulKnockSolution& solution);

std::string export_single_level(const SingleLevelProgram& program);

}  // namespace fermko::simulknock

#endif  // FERMKO_SIMULKNOCK_SINGLE_LEVEL_H_
