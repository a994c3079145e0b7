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

#include "fermko/lp/duality.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace fermko::lp {

double SystemResiduals::max() const {
  return std::max({primal_eq, primal_ineq, nonneg, stationarity, duality_gap});
}

DualizedSystem::DualizedSystem(CanonicalLp lp) : lp_(std::move(lp)) {
  lp_.check();
  if (!lp_.nonneg) throw std::invalid_argument("dualization expects v >= 0");
  eq_t_ = lp_.eq_matrix.transpose();
  ineq_t_ = lp_.ineq_matrix.transpose();
}

std::vector<double> DualizedSystem::dual_objective(const std::vector<double>& y,
                                                   double sigma) const {
  std::vector<double> cost(num_lambda(), 0.0);
  const std::vector<double> b = lp_.rhs_values(y, sigma);
  cost.insert(cost.end(), b.begin(), b.end());
  return cost;
}

LpProblem DualizedSystem::dual_lp(const std::vector<double>& y, double sigma) const {
  const int n = lp_.num_vars();
  const int m = num_lambda();
  LpProblem p;
  p.sense = Sense::kMinimize;
  std::vector<std::tuple<int, int, double>> triplets;
  // Row j: sum_i S_ij lambda_i + sum_k C_kj mu_k = c_j.
  for (int i = 0; i < m; ++i) {
    for (std::size_t k = eq_t_.col_begin(i); k < eq_t_.col_end(i); ++k) {
      triplets.emplace_back(eq_t_.row_index(k), i, eq_t_.value(k));
    }
  }
  for (int r = 0; r < num_mu(); ++r) {
    for (std::size_t k = ineq_t_.col_begin(r); k < ineq_t_.col_end(r); ++k) {
      triplets.emplace_back(ineq_t_.row_index(k), m + r, ineq_t_.value(k));
    }
  }
  p.matrix = SparseMatrix::from_triplets(n, m + num_mu(), std::move(triplets));
  p.objective = dual_objective(y, sigma);
  p.col_lower.assign(m, -kInfinity);
  p.col_lower.resize(m + num_mu(), 0.0);
  p.col_upper.assign(m + num_mu(), kInfinity);
  p.row_lower = lp_.objective;
  p.row_upper = lp_.objective;
  return p;
}

LpProblem DualizedSystem::system_lp(const std::vector<double>& y, double sigma) const {
  const int n = lp_.num_vars();
  const int m = num_lambda();
  const int q = num_mu();
  const std::vector<double> b = lp_.rhs_values(y, sigma);
  LpBuilder builder(Sense::kMinimize);
  for (int j = 0; j < n; ++j) builder.add_col("v", 0.0, kInfinity);
  for (int i = 0; i < m; ++i) builder.add_col("lambda", -kInfinity, kInfinity);
  for (int k = 0; k < q; ++k) builder.add_col("mu", 0.0, kInfinity);

  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, double>> row;
    for (std::size_t k = eq_t_.col_begin(i); k < eq_t_.col_end(i); ++k) {
      row.emplace_back(eq_t_.row_index(k), eq_t_.value(k));
    }
    builder.add_row("mass_balance", row, 0.0, 0.0);
  }
  for (int r = 0; r < q; ++r) {
    std::vector<std::pair<int, double>> row;
    for (std::size_t k = ineq_t_.col_begin(r); k < ineq_t_.col_end(r); ++k) {
      row.emplace_back(ineq_t_.row_index(k), ineq_t_.value(k));
    }
    builder.add_row("primal_ineq", row, -kInfinity, b[r]);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, double>> row;
    for (std::size_t k = lp_.eq_matrix.col_begin(j); k < lp_.eq_matrix.col_end(j); ++k) {
      row.emplace_back(n + lp_.eq_matrix.row_index(k), lp_.eq_matrix.value(k));
    }
    for (std::size_t k = lp_.ineq_matrix.col_begin(j); k < lp_.ineq_matrix.col_end(j); ++k) {
      row.emplace_back(n + m + lp_.ineq_matrix.row_index(k), lp_.ineq_matrix.value(k));
    }
    builder.add_row("stationarity", row, lp_.objective[j], lp_.objective[j]);
  }
  std::vector<std::pair<int, double>> gap;
  for (int j = 0; j < n; ++j) {
    if (lp_.objective[j] != 0.0) gap.emplace_back(j, lp_.objective[j]);
  }
  for (int k = 0; k < q; ++k) {
    if (b[k] != 0.0) gap.emplace_back(n + m + k, -b[k]);
  }
  builder.add_row("strong_duality", gap, 0.0, 0.0);
  return builder.build();
}

SystemResiduals DualizedSystem::residuals(const std::vector<double>& v, const DualSolution& dual,
                                          const std::vector<double>& y, double sigma) const {
  SystemResiduals r;
  const std::vector<double> b = lp_.rhs_values(y, sigma);
  for (double s : lp_.eq_matrix.multiply(v)) r.primal_eq = std::max(r.primal_eq, std::abs(s));
  const std::vector<double> cv = lp_.ineq_matrix.multiply(v);
  for (std::size_t k = 0; k < cv.size(); ++k) r.primal_ineq = std::max(r.primal_ineq, cv[k] - b[k]);
  for (double x : v) r.nonneg = std::max(r.nonneg, -x);
  for (double x : dual.mu) r.nonneg = std::max(r.nonneg, -x);
  const std::vector<double> st = lp_.eq_matrix.multiply_transpose(dual.lambda);
  const std::vector<double> ct = lp_.ineq_matrix.multiply_transpose(dual.mu);
  for (int j = 0; j < lp_.num_vars(); ++j) {
    r.stationarity = std::max(r.stationarity, std::abs(st[j] + ct[j] - lp_.objective[j]));
  }
  double primal = 0.0;
  double dual_value = 0.0;
  for (int j = 0; j < lp_.num_vars(); ++j) primal += lp_.objective[j] * v[j];
  for (std::size_t k = 0; k < b.size(); ++k) dual_value += b[k] * dual.mu[k];
  r.duality_gap = std::abs(primal - dual_value);
  return r;
}

DualizedSystem dualize_inner(const CanonicalLp& lp) { return DualizedSystem(lp); }

DualityCertificate check_strong_duality(const std::vector<double>& v, const DualSolution& dual,
                                        const CanonicalLp& lp, const std::vector<double>& y,
                                        double sigma) {
  const DualizedSystem system(lp);
  const SystemResiduals r = system.residuals(v, dual, y, sigma);
  DualityCertificate cert;
  cert.gap = r.duality_gap;
  cert.primal_residual = std::max({r.primal_eq, r.primal_ineq, 0.0});
  double v_neg = 0.0;
  for (double x : v) v_neg = std::max(v_neg, -x);
  cert.primal_residual = std::max(cert.primal_residual, v_neg);
  double mu_neg = 0.0;
  for (double x : dual.mu) mu_neg = std::max(mu_neg, -x);
  cert.dual_residual = std::max(r.stationarity, mu_neg);
  // Tolerances are relative to the data scale.
  double b_scale = 0.0;
  for (double b : lp.rhs_values(y, sigma)) b_scale = std::max(b_scale, std::abs(b));
  double c_scale = 0.0;
  double objective = 0.0;
  for (int j = 0; j < lp.num_vars(); ++j) {
    c_scale = std::max(c_scale, std::abs(lp.objective[j]));
    objective += lp.objective[j] * v[j];
  }
  cert.certified = cert.gap <= kDualityTol * (1.0 + std::abs(objective)) &&
                   cert.primal_residual <= kFeasTol * (1.0 + b_scale) &&
                   cert.dual_residual <= kDualTol * (1.0 + c_scale);
  return cert;
}

}  // namespace fermko::lp
