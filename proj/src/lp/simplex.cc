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

#include "fermko/lp/simplex.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "fermko/linalg/kernels.h"

namespace fermko::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRebuildPivotTol = 1e-11;

bool is_finite(double v) { return std::isfinite(v); }

}  // namespace

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
    case LpStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

SimplexSolver::SimplexSolver(LpProblem problem, SimplexOptions options)
    : problem_(std::move(problem)), options_(options) {
  problem_.check_dimensions();
  m_ = problem_.num_rows();
  n_ = problem_.num_cols();
  const int total = num_vars();
  lb_.assign(total, 0.0);
  ub_.assign(total, 0.0);
  cost_.assign(total, 0.0);
  for (int j = 0; j < total; ++j) sync_bounds(j);
  set_objective(problem_.objective);
  if (options_.iteration_limit <= 0) options_.iteration_limit = 50 * (m_ + n_) + 1000;
  reset_basis();
}

void SimplexSolver::sync_bounds(int j) {
  if (j < n_) {
    lb_[j] = problem_.col_lower[j];
    ub_[j] = problem_.col_upper[j];
  } else {
    lb_[j] = problem_.row_lower[j - n_];
    ub_[j] = problem_.row_upper[j - n_];
  }
}

double SimplexSolver::nonbasic_value(int j) const {
  switch (status_[j]) {
    case VarStatus::kAtLower: return lb_[j];
    case VarStatus::kAtUpper: return ub_[j];
    default: return 0.0;
  }
}

// Chooses the bound a nonbasic variable rests at, keeping its current side
// when that bound is still finite.
void SimplexSolver::place_nonbasic(int j) {
  const bool has_lo = is_finite(lb_[j]);
  const bool has_up = is_finite(ub_[j]);
  VarStatus s = status_[j];
  if (s == VarStatus::kAtUpper && has_up) {
  } else if (s == VarStatus::kAtLower && has_lo) {
  } else if (has_lo) {
    s = VarStatus::kAtLower;
  } else if (has_up) {
    s = VarStatus::kAtUpper;
  } else {
    s = VarStatus::kAtZero;
  }
  status_[j] = s;
  x_[j] = nonbasic_value(j);
}

void SimplexSolver::set_col_bounds(int col, double lower, double upper) {
  problem_.col_lower[col] = lower;
  problem_.col_upper[col] = upper;
  sync_bounds(col);
  if (status_[col] != VarStatus::kBasic) place_nonbasic(col);
  values_stale_ = true;
}

void SimplexSolver::set_row_bounds(int row, double lower, double upper) {
  problem_.row_lower[row] = lower;
  problem_.row_upper[row] = upper;
  const int j = n_ + row;
  sync_bounds(j);
  if (status_[j] != VarStatus::kBasic) place_nonbasic(j);
  values_stale_ = true;
}

void SimplexSolver::set_objective(const std::vector<double>& objective) {
  if (static_cast<int>(objective.size()) != n_) {
    throw std::invalid_argument("objective length does not match column count");
  }
  problem_.objective = objective;
  const double sign = problem_.sense == Sense::kMaximize ? -1.0 : 1.0;
  for (int j = 0; j < n_; ++j) cost_[j] = sign * objective[j];
}

void SimplexSolver::set_objective_coeff(int col, double value) {
  problem_.objective[col] = value;
  cost_[col] = (problem_.sense == Sense::kMaximize ? -1.0 : 1.0) * value;
}

void SimplexSolver::set_sense(Sense sense) {
  problem_.sense = sense;
  set_objective(problem_.objective);
}

Basis SimplexSolver::basis() const { return Basis{status_}; }

void SimplexSolver::reset_basis() {
  const int total = num_vars();
  status_.assign(total, VarStatus::kAtLower);
  x_.assign(total, 0.0);
  head_.assign(m_, -1);
  position_.assign(total, -1);
  for (int j = 0; j < n_; ++j) place_nonbasic(j);
  for (int i = 0; i < m_; ++i) {
    head_[i] = n_ + i;
    position_[n_ + i] = i;
    status_[n_ + i] = VarStatus::kBasic;
  }
  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) binv_[static_cast<std::size_t>(i) * m_ + i] = -1.0;
  updates_since_refactor_ = 0;
  values_stale_ = true;
}

void SimplexSolver::set_basis(const Basis& basis) {
  if (static_cast<int>(basis.status.size()) != num_vars()) {
    reset_basis();
    return;
  }
  int basic_count = 0;
  for (VarStatus s : basis.status) basic_count += s == VarStatus::kBasic;
  if (basic_count != m_) {
    reset_basis();
    return;
  }
  status_ = basis.status;
  head_.assign(m_, -1);
  position_.assign(num_vars(), -1);
  int row = 0;
  for (int j = 0; j < num_vars(); ++j) {
    if (status_[j] == VarStatus::kBasic) {
      head_[row] = j;
      position_[j] = row++;
    } else {
      place_nonbasic(j);
    }
  }
  refactor();
}

// alpha = B^{-1} a_j.
void SimplexSolver::ftran(int j, std::vector<double>& alpha) const {
  alpha.assign(m_, 0.0);
  if (m_ == 0) return;
  std::span<double> out(alpha);
  if (j >= n_) {
    const int i = j - n_;
    linalg::axpy(-1.0, std::span<const double>(&binv_[static_cast<std::size_t>(i) * m_], m_), out);
    return;
  }
  const SparseMatrix& a = problem_.matrix;
  for (std::size_t k = a.col_begin(j); k < a.col_end(j); ++k) {
    const int i = a.row_index(k);
    linalg::axpy(a.value(k), std::span<const double>(&binv_[static_cast<std::size_t>(i) * m_], m_),
                 out);
  }
}

// y^T = c_B^T B^{-1}.
void SimplexSolver::compute_duals(const std::vector<double>& cost, std::vector<double>& y) const {
  std::vector<double> cb(m_);
  for (int r = 0; r < m_; ++r) cb[r] = cost[head_[r]];
  y.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    y[i] = linalg::dot(std::span<const double>(cb),
                       std::span<const double>(&binv_[static_cast<std::size_t>(i) * m_], m_));
  }
}

double SimplexSolver::reduced_cost(int j, const std::vector<double>& cost,
                                   const std::vector<double>& y) const {
  if (j >= n_) return cost[j] + y[j - n_];
  const SparseMatrix& a = problem_.matrix;
  double d = cost[j];
  for (std::size_t k = a.col_begin(j); k < a.col_end(j); ++k) d -= y[a.row_index(k)] * a.value(k);
  return d;
}

void SimplexSolver::pivot(int entering, int row, const std::vector<double>& alpha) {
  const double pivot_value = alpha[row];
  std::span<const double> col(alpha);
  for (int c = 0; c < m_; ++c) {
    double* bc = &binv_[static_cast<std::size_t>(c) * m_];
    const double factor = bc[row] / pivot_value;
    if (factor != 0.0) {
      linalg::axpy(-factor, col, std::span<double>(bc, m_));
    }
    bc[row] = factor;
  }
  const int leaving = head_[row];
  position_[leaving] = -1;
  head_[row] = entering;
  position_[entering] = row;
  status_[entering] = VarStatus::kBasic;
  ++updates_since_refactor_;
}

// Rebuilds B^{-1} by pivoting the intended basic columns into a slack basis.
// Columns that cannot be pivoted in are dropped and their rows keep slacks.
void SimplexSolver::refactor() {
  std::vector<int> wanted;
  wanted.reserve(m_);
  for (int r = 0; r < m_; ++r) {
    if (head_[r] >= 0 && head_[r] < n_) wanted.push_back(head_[r]);
  }
  std::vector<bool> slack_wanted(m_, false);
  for (int r = 0; r < m_; ++r) {
    if (head_[r] >= n_) slack_wanted[head_[r] - n_] = true;
  }
  const std::vector<VarStatus> original = status_;
  for (int r = 0; r < m_; ++r) position_[head_[r]] = -1;
  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    binv_[static_cast<std::size_t>(i) * m_ + i] = -1.0;
    head_[i] = n_ + i;
    position_[n_ + i] = i;
  }
  std::vector<double> alpha;
  std::vector<int> dropped;
  for (int j : wanted) {
    ftran(j, alpha);
    int best = -1;
    double best_abs = kRebuildPivotTol;
    for (int r = 0; r < m_; ++r) {
      const int h = head_[r];
      if (h < n_ || slack_wanted[h - n_]) continue;
      if (std::abs(alpha[r]) > best_abs) {
        best_abs = std::abs(alpha[r]);
        best = r;
      }
    }
    if (best < 0) {
      dropped.push_back(j);
      continue;
    }
    const int slack = head_[best];
    pivot(j, best, alpha);
    status_[slack] = original[slack];
    place_nonbasic(slack);
  }
  for (int r = 0; r < m_; ++r) status_[head_[r]] = VarStatus::kBasic;
  for (int j : dropped) {
    status_[j] = VarStatus::kAtLower;
    place_nonbasic(j);
  }
  updates_since_refactor_ = 0;
  values_stale_ = true;
}

void SimplexSolver::recompute_basic_values() {
  std::vector<double> rhs(m_, 0.0);
  const SparseMatrix& a = problem_.matrix;
  for (int j = 0; j < num_vars(); ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    x_[j] = nonbasic_value(j);
    if (x_[j] == 0.0) continue;
    if (j >= n_) {
      rhs[j - n_] -= x_[j];
    } else {
      for (std::size_t k = a.col_begin(j); k < a.col_end(j); ++k) {
        rhs[a.row_index(k)] += a.value(k) * x_[j];
      }
    }
  }
  // x_B = -B^{-1} rhs
  std::vector<double> xb(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    if (rhs[i] == 0.0) continue;
    linalg::axpy(-rhs[i], std::span<const double>(&binv_[static_cast<std::size_t>(i) * m_], m_),
                 std::span<double>(xb));
  }
  for (int r = 0; r < m_; ++r) x_[head_[r]] = xb[r];
  values_stale_ = false;
}

double SimplexSolver::infeasibility(int j) const {
  if (x_[j] < lb_[j]) return lb_[j] - x_[j];
  if (x_[j] > ub_[j]) return x_[j] - ub_[j];
  return 0.0;
}

bool SimplexSolver::primal_feasible(double scale) const {
  for (int r = 0; r < m_; ++r) {
    const int j = head_[r];
    const double tol = scale * kFeasTol * (1.0 + std::abs(x_[j]));
    if (x_[j] < lb_[j] - tol || x_[j] > ub_[j] + tol) return false;
  }
  return true;
}

LpStatus SimplexSolver::iterate(int& iterations, int limit) {
  std::vector<double> y;
  std::vector<double> alpha;
  std::vector<double> phase_cost(num_vars(), 0.0);
  int degenerate_run = 0;
  while (true) {
    if (updates_since_refactor_ >= options_.refactor_interval) refactor();
    if (values_stale_) recompute_basic_values();

    bool phase_one = false;
    for (int r = 0; r < m_; ++r) {
      const int j = head_[r];
      const double tol = kFeasTol * (1.0 + std::abs(x_[j]));
      if (x_[j] < lb_[j] - tol || x_[j] > ub_[j] + tol) {
        phase_one = true;
        break;
      }
    }
    const std::vector<double>* cost = &cost_;
    if (phase_one) {
      std::fill(phase_cost.begin(), phase_cost.end(), 0.0);
      for (int r = 0; r < m_; ++r) {
        const int j = head_[r];
        const double tol = kFeasTol * (1.0 + std::abs(x_[j]));
        if (x_[j] < lb_[j] - tol) phase_cost[j] = -1.0;
        if (x_[j] > ub_[j] + tol) phase_cost[j] = 1.0;
      }
      cost = &phase_cost;
    }
    compute_duals(*cost, y);

    // Pricing: Dantzig, switching to Bland after a run of degenerate pivots.
    const bool bland = degenerate_run >= options_.degenerate_before_bland;
    int entering = -1;
    double entering_d = 0.0;
    double best_score = 0.0;
    for (int j = 0; j < num_vars(); ++j) {
      const VarStatus s = status_[j];
      if (s == VarStatus::kBasic) continue;
      if (lb_[j] == ub_[j]) continue;
      const double d = reduced_cost(j, *cost, y);
      bool eligible = false;
      if (s == VarStatus::kAtLower) eligible = d < -kDualTol;
      else if (s == VarStatus::kAtUpper) eligible = d > kDualTol;
      else eligible = std::abs(d) > kDualTol;
      if (!eligible) continue;
      if (bland) {
        entering = j;
        entering_d = d;
        break;
      }
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        entering = j;
        entering_d = d;
      }
    }
    if (entering < 0) {
      if (phase_one) return LpStatus::kInfeasible;
      return LpStatus::kOptimal;
    }
    if (iterations >= limit) return LpStatus::kIterationLimit;
    ++iterations;

    const double dir = entering_d < 0 ? 1.0 : -1.0;
    ftran(entering, alpha);

    // Harris two-pass ratio test. Basic x_r changes by -dir * alpha_r * t.
    auto limit_for = [&](int r, double tol) -> double {
      const double delta = -dir * alpha[r];
      if (std::abs(alpha[r]) <= kPivotTol) return kInfinity;
      const int j = head_[r];
      const double xl = lb_[j];
      const double xu = ub_[j];
      const double xv = x_[j];
      const double ftol = kFeasTol * (1.0 + std::abs(xv));
      if (phase_one && xv < xl - ftol) {
        // Below its lower bound: blocks on reaching it.
        return delta > 0 ? (xl - xv + tol) / delta : kInfinity;
      }
      if (phase_one && xv > xu + ftol) {
        return delta < 0 ? (xv - xu + tol) / -delta : kInfinity;
      }
      if (delta < 0) return is_finite(xl) ? std::max(0.0, xv - xl + tol) / -delta : kInfinity;
      return is_finite(xu) ? std::max(0.0, xu - xv + tol) / delta : kInfinity;
    };
    double theta_max = kInfinity;
    for (int r = 0; r < m_; ++r) {
      theta_max = std::min(theta_max, limit_for(r, kFeasTol * (1.0 + std::abs(x_[head_[r]]))));
    }
    const double range = ub_[entering] - lb_[entering];
    int leave_row = -1;
    double step = kInfinity;
    if (std::isfinite(theta_max)) {
      double best_alpha = 0.0;
      for (int r = 0; r < m_; ++r) {
        const double t = limit_for(r, 0.0);
        if (t <= theta_max && std::abs(alpha[r]) > best_alpha) {
          best_alpha = std::abs(alpha[r]);
          leave_row = r;
          step = t;
        }
      }
    }
    if (is_finite(range) && range <= step) {
      // Bound flip of the entering variable.
      step = range;
      leave_row = -1;
    }
    if (!std::isfinite(step)) {
      if (phase_one) return LpStatus::kNumericalFailure;
      return LpStatus::kUnbounded;
    }
    if (step <= kFeasTol) ++degenerate_run;
    else degenerate_run = 0;

    if (leave_row < 0) {
      status_[entering] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
      x_[entering] = nonbasic_value(entering);
      values_stale_ = true;
      continue;
    }
    const int leaving = head_[leave_row];
    const double before = x_[leaving];
    const double ftol = kFeasTol * (1.0 + std::abs(before));
    VarStatus target = -dir * alpha[leave_row] < 0 ? VarStatus::kAtLower : VarStatus::kAtUpper;
    if (phase_one && before < lb_[leaving] - ftol) target = VarStatus::kAtLower;
    if (phase_one && before > ub_[leaving] + ftol) target = VarStatus::kAtUpper;
    pivot(entering, leave_row, alpha);
    status_[leaving] = target;
    place_nonbasic(leaving);
    values_stale_ = true;
  }
}

// Max violation of A x - s = 0 and of the bounds, scaled per entry.
bool SimplexSolver::verified() const {
  const std::vector<double> xs(x_.begin(), x_.begin() + n_);
  const std::vector<double> activity = problem_.matrix.multiply(xs);
  for (int i = 0; i < m_; ++i) {
    const double s = x_[n_ + i];
    if (std::abs(activity[i] - s) > 1e2 * kFeasTol * (1.0 + std::abs(s))) return false;
  }
  return primal_feasible(1e2);
}

LpStatus SimplexSolver::solve() {
  int iterations = 0;
  LpStatus status = LpStatus::kNumericalFailure;
  // Crossed bounds on a nonbasic variable are invisible to phase 1.
  for (int j = 0; j < n_ + m_; ++j) {
    if (lb_[j] > ub_[j] + kFeasTol * (1.0 + std::abs(ub_[j]))) {
      extract_solution(LpStatus::kInfeasible, 0);
      return LpStatus::kInfeasible;
    }
  }
  for (int attempt = 0; attempt < 3; ++attempt) {
    status = iterate(iterations, options_.iteration_limit);
    if (status != LpStatus::kOptimal && status != LpStatus::kInfeasible) break;
    if (values_stale_) recompute_basic_values();
    if (status == LpStatus::kOptimal && verified()) break;
    if (status == LpStatus::kInfeasible && updates_since_refactor_ == 0) break;
    // Confirm from a fresh factorization.
    refactor();
    status = LpStatus::kNumericalFailure;
  }
  if (status == LpStatus::kOptimal && !verified()) status = LpStatus::kNumericalFailure;
  extract_solution(status, iterations);
  return status;
}

void SimplexSolver::extract_solution(LpStatus status, int iterations) {
  LpSolution& s = solution_;
  s.status = status;
  s.iterations = iterations;
  s.x.assign(x_.begin(), x_.begin() + n_);
  s.row_activity = problem_.matrix.multiply(s.x);
  s.objective = 0.0;
  for (int j = 0; j < n_; ++j) s.objective += problem_.objective[j] * s.x[j];
  const double sign = problem_.sense == Sense::kMaximize ? -1.0 : 1.0;
  std::vector<double> y;
  compute_duals(cost_, y);
  s.row_duals.assign(m_, 0.0);
  s.reduced_costs.assign(n_, 0.0);
  if (status != LpStatus::kOptimal) return;
  for (int i = 0; i < m_; ++i) {
    s.row_duals[i] = status_[n_ + i] == VarStatus::kBasic ? 0.0 : sign * y[i];
  }
  for (int j = 0; j < n_; ++j) {
    s.reduced_costs[j] = status_[j] == VarStatus::kBasic ? 0.0 : sign * reduced_cost(j, cost_, y);
  }
}

LpSolution solve_lp(const LpProblem& problem, SimplexOptions options) {
  SimplexSolver solver(problem, options);
  solver.solve();
  return solver.solution();
}

}  // namespace fermko::lp
