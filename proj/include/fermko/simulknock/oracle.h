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

#ifndef FERMKO_SIMULKNOCK_ORACLE_H_
#define FERMKO_SIMULKNOCK_ORACLE_H_

#include <cstdint>
#include <stdexcept>

#include "fermko/simulknock/problem.h"

namespace fermko::simulknock {

inline constexpr std::int64_t kOracleSubsetGuard = 1'000'000;

class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of subsets of size <= k drawn from n items, saturating at guard + 1.
std::int64_t count_subsets(int n, int k, std::int64_t guard = kOracleSubsetGuard);

// Exhaustive reference solver. Every subset gets a primal FBA; MM problems
// scan the uptake range and refine c_S by golden section, Monod problems solve
// the yield subproblem by Charnes-Cooper. No pruning. Throws OracleGuardError
// past kOracleSubsetGuard subsets.
SimulKnockSolution enumerate_oracle(const SimulKnockProblem& problem);

}  // namespace fermko::simulknock

#endif  // FERMKO_SIMULKNOCK_ORACLE_H_
