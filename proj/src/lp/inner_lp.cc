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

#include "fermko/lp/inner_lp.h"

#include <stdexcept>
#include <tuple>

namespace fermko::lp {
namespace {

// How each inequality row of a CanonicalLp lands in the concrete LP.
struct RowPlacement {
  std::vector<int> singleton_col;    // column for single-entry rows, else -1
  std::vector<double> singleton_coeff;
  std::vector<int> lp_row;           // LP row for general rows, else -1
  std::vector<int> upper_source;     // per column: ineq row giving the upper bound
  std::vector<int> lower_source;     // per column: ineq row giving the lower bound
};

struct Built {
  LpProblem problem;
  RowPlacement placement;
};

Built build_concrete(const CanonicalLp& lp, const std::vector<double>& y, double sigma) {
  lp.check();
  const int n = lp.num_vars();
  const std::vector<double> rhs = lp.rhs_values(y, sigma);
  const SparseMatrix ineq_t = lp.ineq_matrix.transpose();  // columns = ineq rows

  Built out;
  RowPlacement& p = out.placement;
  p.singleton_col.assign(lp.num_ineq(), -1);
  p.singleton_coeff.assign(lp.num_ineq(), 0.0);
  p.lp_row.assign(lp.num_ineq(), -1);
  p.upper_source.assign(n, -1);
  p.lower_source.assign(n, -1);

  LpProblem& problem = out.problem;
  problem.sense = Sense::kMaximize;
  problem.objective = lp.objective;
  problem.col_lower.assign(n, lp.nonneg ? 0.0 : -kInfinity);
  problem.col_upper.assign(n, kInfinity);

  std::vector<std::tuple<int, int, double>> triplets;
  int rows = 0;
  for (int i = 0; i < lp.num_eq(); ++i) {
    problem.row_lower.push_back(0.0);
    problem.row_upper.push_back(0.0);
    ++rows;
  }
  for (int j = 0; j < n; ++j) {
    for (std::size_t k = lp.eq_matrix.col_begin(j); k < lp.eq_matrix.col_end(j); ++k) {
      triplets.emplace_back(lp.eq_matrix.row_index(k), j, lp.eq_matrix.value(k));
    }
  }
  for (int k = 0; k < lp.num_ineq(); ++k) {
    const std::size_t begin = ineq_t.col_begin(k);
    const std::size_t end = ineq_t.col_end(k);
    if (end - begin == 1) {
      const int j = ineq_t.row_index(begin);
      const double a = ineq_t.value(begin);
      p.singleton_col[k] = j;
      p.singleton_coeff[k] = a;
      const double bound = rhs[k] / a;
      if (a > 0) {
        if (bound < problem.col_upper[j]) {
          problem.col_upper[j] = bound;
          p.upper_source[j] = k;
        }
      } else if (bound > problem.col_lower[j] ||
                 (bound == problem.col_lower[j] && p.lower_source[j] < 0)) {
        problem.col_lower[j] = bound;
        p.lower_source[j] = k;
      }
      continue;
    }
    p.lp_row[k] = rows;
    for (std::size_t e = begin; e < end; ++e) triplets.emplace_back(rows, ineq_t.row_index(e), ineq_t.value(e));
    problem.row_lower.push_back(-kInfinity);
    problem.row_upper.push_back(rhs[k]);
    ++rows;
  }
  problem.matrix = SparseMatrix::from_triplets(rows, n, std::move(triplets));
  return out;
}

}  // namespace

double RhsTerm::evaluate(const std::vector<double>& y, double sigma) const {
  switch (factor) {
    case Factor::kConstant: return coeff;
    case Factor::kKnockout: return y.empty() ? coeff : coeff * y[reaction];
    case Factor::kSigma: return coeff * sigma;
  }
  return coeff;
}

void CanonicalLp::check() const {
  const int n = num_vars();
  if (eq_matrix.cols() != n || ineq_matrix.cols() != n) {
    throw std::invalid_argument("canonical LP matrices do not match the variable count");
  }
  if (static_cast<int>(ineq_rhs.size()) != ineq_matrix.rows()) {
    throw std::invalid_argument("canonical LP right-hand side length mismatch");
  }
  for (const RhsTerm& t : ineq_rhs) {
    if (t.factor == RhsTerm::Factor::kKnockout && (t.reaction < 0 || t.reaction >= num_reactions)) {
      throw std::invalid_argument("right-hand side references an unknown reaction");
    }
  }
}

std::vector<double> CanonicalLp::rhs_values(const std::vector<double>& y, double sigma) const {
  if (!y.empty() && static_cast<int>(y.size()) != num_reactions) {
    throw std::invalid_argument("knockout vector length mismatch");
  }
  std::vector<double> out(ineq_rhs.size());
  for (std::size_t k = 0; k < ineq_rhs.size(); ++k) out[k] = ineq_rhs[k].evaluate(y, sigma);
  return out;
}

CanonicalLp build_inner_lp(const InnerLpSpec& spec) {
  if (spec.S == nullptr) throw std::invalid_argument("inner LP needs a stoichiometric matrix");
  const int n = spec.S->cols();
  if (static_cast<int>(spec.lower.size()) != n || static_cast<int>(spec.upper.size()) != n ||
      static_cast<int>(spec.parent.size()) != n || static_cast<int>(spec.objective.size()) != n) {
    throw std::invalid_argument("inner LP vectors do not match the column count");
  }
  CanonicalLp lp;
  lp.objective = spec.objective;
  lp.eq_matrix = *spec.S;
  lp.num_reactions = spec.num_reactions;
  const bool kinetic = spec.kinetic_col >= 0;
  std::vector<std::tuple<int, int, double>> triplets;
  for (int j = 0; j < n; ++j) {
    triplets.emplace_back(j, j, -1.0);
    triplets.emplace_back(n + j, j, 1.0);
    lp.ineq_rhs.push_back({RhsTerm::Factor::kKnockout, spec.parent[j], -spec.lower[j]});
  }
  for (int j = 0; j < n; ++j) {
    lp.ineq_rhs.push_back({RhsTerm::Factor::kKnockout, spec.parent[j], spec.upper[j]});
  }
  if (kinetic) {
    triplets.emplace_back(2 * n, spec.kinetic_col, 1.0);
    lp.ineq_rhs.push_back({RhsTerm::Factor::kSigma, -1, spec.kinetic_scale});
    lp.kinetic_row = 2 * n;
  }
  lp.ineq_matrix = SparseMatrix::from_triplets(2 * n + (kinetic ? 1 : 0), n, std::move(triplets));
  lp.check();
  return lp;
}

LpProblem to_lp_problem(const CanonicalLp& lp, const std::vector<double>& y, double sigma) {
  return build_concrete(lp, y, sigma).problem;
}

CanonicalSolution solve_canonical(const CanonicalLp& lp, const std::vector<double>& y,
                                  double sigma) {
  Built built = build_concrete(lp, y, sigma);
  const LpSolution s = solve_lp(built.problem);
  CanonicalSolution out;
  out.status = s.status;
  if (s.status != LpStatus::kOptimal) return out;
  out.objective = s.objective;
  out.v = s.x;
  out.lambda.assign(s.row_duals.begin(), s.row_duals.begin() + lp.num_eq());
  out.mu.assign(lp.num_ineq(), 0.0);
  const RowPlacement& p = built.placement;
  for (int k = 0; k < lp.num_ineq(); ++k) {
    if (p.lp_row[k] >= 0) out.mu[k] = std::max(0.0, s.row_duals[p.lp_row[k]]);
  }
  // Column reduced costs belong to whichever single-entry row set the bound.
  for (int j = 0; j < lp.num_vars(); ++j) {
    const double d = s.reduced_costs[j];
    if (d > 0 && p.upper_source[j] >= 0) {
      out.mu[p.upper_source[j]] = d / p.singleton_coeff[p.upper_source[j]];
    } else if (d < 0 && p.lower_source[j] >= 0) {
      out.mu[p.lower_source[j]] = d / p.singleton_coeff[p.lower_source[j]];
    }
  }
  return out;
}

}  // namespace fermko::lp
