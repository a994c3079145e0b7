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

#ifndef FERMKO_LP_DUALITY_H_
#define FERMKO_LP_DUALITY_H_

#include <vector>

#include "fermko/lp/inner_lp.h"
#include "fermko/lp/linear_program.h"

namespace fermko::lp {

struct DualSolution {
  std::vector<double> lambda;  // mass balances, free
  std::vector<double> mu;      // inequality rows, >= 0
};

struct SystemResiduals {
  double primal_eq = 0.0;       // ||S v||_inf
  double primal_ineq = 0.0;     // max(C v - b, 0)
  double nonneg = 0.0;          // max(-v, -mu)
  double stationarity = 0.0;    // ||S^T lambda + C^T mu - c||_inf
  double duality_gap = 0.0;     // |c^T v - b^T mu|
  double max() const;
};

// Strong-duality system of a canonical LP:
//   c^T v = b^T mu, S v = 0, C v <= b, S^T lambda + C^T mu = c, v, mu >= 0,
// with b kept symbolic in (y, sigma).
class DualizedSystem {
 public:
  explicit DualizedSystem(CanonicalLp lp);

  const CanonicalLp& lp() const { return lp_; }

  // min b^T mu s.t. S^T lambda + C^T mu = c, mu >= 0. Columns are lambda then
  // mu; rows follow the primal variables. Only the objective depends on
  // (y, sigma).
  LpProblem dual_lp(const std::vector<double>& y, double sigma) const;
  // Objective of dual_lp for the given (y, sigma).
  std::vector<double> dual_objective(const std::vector<double>& y, double sigma) const;
  // Every constraint of the system as one LP over (v, lambda, mu) with a zero
  // objective; any feasible point is primal-dual optimal.
  LpProblem system_lp(const std::vector<double>& y, double sigma) const;

  SystemResiduals residuals(const std::vector<double>& v, const DualSolution& dual,
                            const std::vector<double>& y, double sigma) const;

  int num_lambda() const { return lp_.num_eq(); }
  int num_mu() const { return lp_.num_ineq(); }

 private:
  CanonicalLp lp_;
  SparseMatrix eq_t_;
  SparseMatrix ineq_t_;
};

// Throws std::invalid_argument unless lp is in the canonical nonnegative shape.
DualizedSystem dualize_inner(const CanonicalLp& lp);

struct DualityCertificate {
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool certified = false;
};

DualityCertificate check_strong_duality(const std::vector<double>& v, const DualSolution& dual,
                                        const CanonicalLp& lp, const std::vector<double>& y = {},
                                        double sigma = 1.0);

}  // namespace fermko::lp

#endif  // FERMKO_LP_DUALITY_H_
