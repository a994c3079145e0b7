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

#ifndef FERMKO_LP_INNER_LP_H_
#define FERMKO_LP_INNER_LP_H_

#include <vector>

#include "fermko/lp/linear_program.h"
#include "fermko/lp/simplex.h"

namespace fermko::lp {

// One entry of the inequality right-hand side: coeff, coeff * y[reaction] or
// coeff * sigma.
struct RhsTerm {
  enum class Factor { kConstant, kKnockout, kSigma };
  Factor factor = Factor::kConstant;
  int reaction = -1;
  double coeff = 0.0;

  double evaluate(const std::vector<double>& y, double sigma) const;
};

// Canonical cellular LP: max c^T v s.t. eq v = 0, ineq v <= rhs, v >= 0.
// For the inner problem ineq = [-I; I; c_kin^T] and
// rhs = [-lower o By; upper o By; v_S_max sigma].
struct CanonicalLp {
  std::vector<double> objective;
  SparseMatrix eq_matrix;
  SparseMatrix ineq_matrix;
  std::vector<RhsTerm> ineq_rhs;
  bool nonneg = true;
  int num_reactions = 0;  // length of y
  int kinetic_row = -1;   // row of ineq carrying the kinetic bound, or -1

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_eq() const { return eq_matrix.rows(); }
  int num_ineq() const { return ineq_matrix.rows(); }
  // Throws std::invalid_argument on inconsistent dimensions.
  void check() const;
  // Empty y means every reaction active.
  std::vector<double> rhs_values(const std::vector<double>& y, double sigma) const;
};

struct InnerLpSpec {
  const SparseMatrix* S = nullptr;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<int> parent;  // B as parent reaction per column
  int num_reactions = 0;
  std::vector<double> objective;
  int kinetic_col = -1;  // column bounded by v_S_max * sigma, -1 for none
  double kinetic_scale = 0.0;
};

CanonicalLp build_inner_lp(const InnerLpSpec& spec);

// Concrete LP for given knockouts and sigma. Single-entry inequality rows
// become column bounds; the rest become rows.
LpProblem to_lp_problem(const CanonicalLp& lp, const std::vector<double>& y, double sigma);

struct CanonicalSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> v;
  std::vector<double> lambda;
  std::vector<double> mu;
};

// Solves the canonical LP and recovers (lambda, mu) from the simplex duals.
CanonicalSolution solve_canonical(const CanonicalLp& lp, const std::vector<double>& y = {},
                                  double sigma = 1.0);

}  // namespace fermko::lp

#endif  // FERMKO_LP_INNER_LP_H_
