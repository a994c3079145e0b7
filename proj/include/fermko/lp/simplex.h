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

#ifndef FERMKO_LP_SIMPLEX_H_
#define FERMKO_LP_SIMPLEX_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fermko/lp/linear_program.h"

namespace fermko::lp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kNumericalFailure };

std::string to_string(LpStatus status);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kAtZero };

// Status of every structural column followed by every row (logical) variable.
struct Basis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> row_activity;
  // Objective sensitivity with respect to the active row bound, in the
  // problem's own sense.
  std::vector<double> row_duals;
  // Objective sensitivity with respect to the active column bound.
  std::vector<double> reduced_costs;
  int iterations = 0;
};

struct SimplexOptions {
  int iteration_limit = 0;  // 0 picks a size-based default
  int refactor_interval = 100;
  int degenerate_before_bland = 50;
};

// Bounded revised primal simplex on A x - s = 0 with an explicit dense basis
// inverse. The object keeps its basis between calls, so a bound or objective
// change followed by solve() is a warm start. Copying the object copies the
// basis.
class SimplexSolver {
 public:
  explicit SimplexSolver(LpProblem problem, SimplexOptions options = {});

  LpStatus solve();
  const LpSolution& solution() const { return solution_; }
  LpStatus status() const { return solution_.status; }
  double objective() const { return solution_.objective; }

  const LpProblem& problem() const { return problem_; }
  void set_col_bounds(int col, double lower, double upper);
  void set_row_bounds(int row, double lower, double upper);
  void set_objective(const std::vector<double>& objective);
  void set_objective_coeff(int col, double value);
  void set_sense(Sense sense);

  Basis basis() const;
  // Installs a previously saved basis; falls back to the slack basis on a
  // size mismatch. Singular bases are repaired with slacks.
  void set_basis(const Basis& basis);
  void reset_basis();

 private:
  int num_vars() const { return n_ + m_; }
  double lower(int j) const { return lb_[j]; }
  double upper(int j) const { return ub_[j]; }
  void sync_bounds(int j);
  double nonbasic_value(int j) const;
  void place_nonbasic(int j);
  void ftran(int j, std::vector<double>& alpha) const;
  void compute_duals(const std::vector<double>& cost, std::vector<double>& y) const;
  double reduced_cost(int j, const std::vector<double>& cost, const std::vector<double>& y) const;
  void pivot(int entering, int row, const std::vector<double>& alpha);
  void refactor();
  void recompute_basic_values();
  double infeasibility(int j) const;
  bool primal_feasible(double scale) const;
  bool verified() const;
  LpStatus iterate(int& iterations, int limit);
  void extract_solution(LpStatus status, int iterations);

  LpProblem problem_;
  SimplexOptions options_;
  int m_ = 0;
  int n_ = 0;
  std::vector<double> lb_;
  std::vector<double> ub_;
  std::vector<double> cost_;  // internal minimization costs
  std::vector<VarStatus> status_;
  std::vector<int> head_;          // basic variable per row position
  std::vector<int> position_;      // row position per variable or -1
  std::vector<double> binv_;       // column-major m x m
  std::vector<double> x_;
  int updates_since_refactor_ = 0;
  bool values_stale_ = true;
  LpSolution solution_;
};

// One-shot convenience wrapper.
LpSolution solve_lp(const LpProblem& problem, SimplexOptions options = {});

}  // namespace fermko::lp

#endif  // FERMKO_LP_SIMPLEX_H_
