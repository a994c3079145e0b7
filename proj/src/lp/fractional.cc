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

#include "fermko/lp/fractional.h"

#include <cmath>

namespace fermko::lp {

double LinearFractional::ratio(const std::vector<double>& x) const {
  double p = numerator_const;
  double q = denominator_const;
  for (std::size_t j = 0; j < x.size(); ++j) {
    p += numerator[j] * x[j];
    q += denominator[j] * x[j];
  }
  return p / q;
}

FractionalResult charnes_cooper(const LpProblem& base, const LinearFractional& f) {
  base.check_dimensions();
  const int n = base.num_cols();
  LpBuilder b(Sense::kMaximize);
  for (int j = 0; j < n; ++j) {
    // A zero lower bound stays a column bound since it scales to itself.
    const double lo = base.col_lower[j] == 0.0 ? 0.0 : -kInfinity;
    b.add_col("z", lo, kInfinity, f.numerator[j]);
  }
  const int t = b.add_col("t", 0.0, kInfinity, f.numerator_const);

  for (int j = 0; j < n; ++j) {
    const double lo = base.col_lower[j];
    const double hi = base.col_upper[j];
    if (lo == hi) {
      b.add_row("fix", {{j, 1.0}, {t, -lo}}, 0.0, 0.0);
      continue;
    }
    if (std::isfinite(lo) && lo != 0.0) b.add_row("lo", {{j, 1.0}, {t, -lo}}, 0.0, kInfinity);
    if (std::isfinite(hi)) b.add_row("hi", {{j, 1.0}, {t, -hi}}, -kInfinity, 0.0);
  }
  const SparseMatrix at = base.matrix.transpose();
  for (int i = 0; i < base.num_rows(); ++i) {
    std::vector<std::pair<int, double>> row;
    for (std::size_t k = at.col_begin(i); k < at.col_end(i); ++k) {
      row.emplace_back(at.row_index(k), at.value(k));
    }
    const double lo = base.row_lower[i];
    const double hi = base.row_upper[i];
    if (lo == hi) {
      auto eq = row;
      if (lo != 0.0) eq.emplace_back(t, -lo);
      b.add_row("eq", eq, 0.0, 0.0);
      continue;
    }
    if (std::isfinite(lo)) {
      auto r = row;
      if (lo != 0.0) r.emplace_back(t, -lo);
      b.add_row("ge", r, 0.0, kInfinity);
    }
    if (std::isfinite(hi)) {
      auto r = row;
      if (hi != 0.0) r.emplace_back(t, -hi);
      b.add_row("le", r, -kInfinity, 0.0);
    }
  }
  std::vector<std::pair<int, double>> norm;
  for (int j = 0; j < n; ++j) {
    if (f.denominator[j] != 0.0) norm.emplace_back(j, f.denominator[j]);
  }
  norm.emplace_back(t, f.denominator_const);
  b.add_row("normalize", norm, 1.0, 1.0);

  const LpSolution s = solve_lp(b.build());
  FractionalResult out;
  out.status = s.status;
  out.iterations = s.iterations;
  if (s.status != LpStatus::kOptimal) return out;
  const double tv = s.x[t];
  if (tv <= 1e-12) {
    // Optimum approached only along a recession direction.
    out.status = LpStatus::kNumericalFailure;
    return out;
  }
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = s.x[j] / tv;
  out.value = s.objective;
  return out;
}

FractionalResult dinkelbach(SimplexSolver& solver, const LinearFractional& f, double tolerance,
                            int max_iterations) {
  FractionalResult out;
  const int n = solver.problem().num_cols();
  solver.set_sense(Sense::kMaximize);
  solver.set_objective(f.numerator);
  LpStatus status = solver.solve();
  out.iterations = solver.solution().iterations;
  if (status != LpStatus::kOptimal) {
    out.status = status;
    return out;
  }
  std::vector<double> x = solver.solution().x;
  double lambda = f.ratio(x);
  std::vector<double> cost(n);
  for (int it = 0; it < max_iterations; ++it) {
    for (int j = 0; j < n; ++j) cost[j] = f.numerator[j] - lambda * f.denominator[j];
    solver.set_objective(cost);
    status = solver.solve();
    out.iterations += solver.solution().iterations;
    if (status != LpStatus::kOptimal) {
      out.status = status;
      return out;
    }
    const double excess =
        solver.objective() + f.numerator_const - lambda * f.denominator_const;
    const std::vector<double>& candidate = solver.solution().x;
    if (excess <= tolerance * (1.0 + std::abs(lambda))) {
      out.status = LpStatus::kOptimal;
      out.value = lambda;
      out.x = x;
      return out;
    }
    x = candidate;
    lambda = f.ratio(x);
  }
  out.status = LpStatus::kIterationLimit;
  out.value = lambda;
  out.x = x;
  return out;
}

}  // namespace fermko::lp
