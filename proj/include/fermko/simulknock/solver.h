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

#ifndef FERMKO_SIMULKNOCK_SOLVER_H_
#define FERMKO_SIMULKNOCK_SOLVER_H_

#include "fermko/simulknock/problem.h"

namespace fermko::simulknock {

// Global optimum of the single-level program. Inner optimality is enforced
// through the dual LP value (strong duality); MM uptake is handled by a
// branch and bound over sigma, Monod through a fractional program at the
// fixed growth rate. Ties resolve to the lexicographically smallest
// knockout set.
SimulKnockSolution solve_simulknock(const SimulKnockProblem& problem);

}  // namespace fermko::simulknock

#endif  // FERMKO_SIMULKNOCK_SOLVER_H_
