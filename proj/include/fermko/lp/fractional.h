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

#ifndef FERMKO_LP_FRACTIONAL_H_
#define FERMKO_LP_FRACTIONAL_H_

#include <vector>

#include "fermko/lp/linear_program.h"
#include "fermko/lp/simplex.h"

namespace fermko::lp {

// max (p^T x + p0) / (q^T x + q0) over the feasible set of a base LP. The
// denominator must be positive on that set.
struct LinearFractional {
  std::vector<double> numerator;
  double numerator_const = 0.0;
  std::vector<double> denominator;
  double denominator_const = 0.0;

  double ratio(const std::vector<double>& x) const;
};

struct FractionalResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double value = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

// Charnes-Cooper: z = t x, t = 1 / (q^T x + q0), solved as one LP.
FractionalResult charnes_cooper(const LpProblem& base, const LinearFractional& f);

// Dinkelbach iterations on a warm solver whose problem is the base LP. The
// solver's objective is overwritten.
FractionalResult dinkelbach(SimplexSolver& solver, const LinearFractional& f,
                            double tolerance = 1e-11, int max_iterations = 100);

}  // namespace fermko::lp

#endif  // FERMKO_LP_FRACTIONAL_H_
