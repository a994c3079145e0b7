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

#include "fermko/simulknock/single_level.h"

#include <cmath>
#include <stdexcept>

#include "fermko/lp/duality.h"

namespace fermko::simulknock {

using lp::QuadRow;
using lp::QuadTerm;
using lp::RhsTerm;

SingleLevelProgram assemble_single_level(const SimulKnockProblem& problem) {
  problem.check();
  const strain::FluxContext& ctx = *problem.context;
  const auto& net = ctx.net();
  const bool mm = problem.is_mm();
  const double v_S_max = mm ? problem.mm().v_S_max : 0.0;

  SingleLevelProgram prog;
  prog.inner = ctx.inner_lp(mm, v_S_max);
  prog.growth_floor = growth_floor(problem);
  if (!std::isfinite(prog.growth_floor)) throw std::runtime_error("wild type is infeasible");
  const lp::CanonicalLp& in = prog.inner;
  lp::QuadraticModel& q = prog.model;
  q.sense = lp::Sense::kMaximize;

  const int r = ctx.map().r;
  const std::vector<int> search = problem.search_candidates();
  std::vector<char> free_y(r, 0);
  for (int k : search) free_y[k] = 1;
  std::vector<char> fixed_off(r, 0);
  for (int k : problem.fixed_knockouts) fixed_off[k] = 1;
  for (int i = 0; i < r; ++i) {
    const double lo = free_y[i] ? 0.0 : (fixed_off[i] ? 0.0 : 1.0);
    const double hi = fixed_off[i] ? 0.0 : 1.0;
    prog.y.push_back(q.add_var("y_" + ctx.reaction_id(i), lo, hi, true));
  }
  for (int j = 0; j < net.n; ++j) prog.v.push_back(q.add_var("v_" + net.column_ids[j], 0.0, lp::kInfinity));
  for (int i = 0; i < in.num_eq(); ++i) {
    prog.lambda.push_back(q.add_var("lambda_" + std::to_string(i), -lp::kInfinity, lp::kInfinity));
  }
  for (int k = 0; k < in.num_ineq(); ++k) {
    prog.mu.push_back(q.add_var("mu_" + std::to_string(k), 0.0, lp::kInfinity));
  }
  const double c_f = problem.process.c_S_feed_max;
  prog.c_S = q.add_var("c_S", 0.0, c_f);
  prog.c_S_feed = q.add_var("c_S_feed", 0.0, c_f);
  if (mm) prog.sigma = q.add_var("sigma", 0.0, 1.0);
  prog.c_bio = q.add_var("c_bio", 0.0, lp::kInfinity);
  prog.c_P = q.add_var("c_P", 0.0, lp::kInfinity);

  const int v_bio = prog.v[ctx.biomass_col()];
  const int v_S = prog.v[ctx.substrate_col()];
  const int v_P = prog.v[ctx.product_col()];
  const double M_S = problem.process.M_S;
  const double M_P = problem.process.M_P;

  // sum over free candidates of (1 - y) <= K
  QuadRow card{"cardinality", {}, {}, static_cast<double>(search.size()) - problem.max_knockouts,
               lp::kInfinity};
  for (int k : search) card.linear.emplace_back(prog.y[k], 1.0);
  q.rows.push_back(std::move(card));

  // v_bio (c_S_feed - c_S) = M_S v_S c_bio
  q.rows.push_back({"substrate_balance", {},
                    {{v_bio, prog.c_S_feed, 1.0}, {v_bio, prog.c_S, -1.0}, {v_S, prog.c_bio, -M_S}},
                    0.0, 0.0});
  // v_bio c_P = M_P v_P c_bio
  q.rows.push_back({"product_balance", {}, {{v_bio, prog.c_P, 1.0}, {v_P, prog.c_bio, -M_P}}, 0.0, 0.0});

  if (mm) {
    const double K = problem.mm().K_S_MM;
    q.rows.push_back({"uptake_kinetics", {{v_S, 1.0}, {prog.sigma, -v_S_max}}, {}, 0.0, 0.0});
    q.rows.push_back({"sigma_definition", {{prog.sigma, K}, {prog.c_S, -1.0}},
                      {{prog.sigma, prog.c_S, 1.0}}, 0.0, 0.0});
  } else {
    const auto& k = problem.monod();
    // c_S (v_bio_max - v_bio) = K_S v_bio
    q.rows.push_back({"monod_clearing", {{prog.c_S, k.v_bio_max}, {v_bio, -k.K_S}},
                      {{prog.c_S, v_bio, -1.0}}, 0.0, 0.0});
  }

  // c^T v = b^T mu
  QuadRow duality{"strong_duality", {}, {}, 0.0, 0.0};
  for (int j = 0; j < in.num_vars(); ++j) {
    if (in.objective[j] != 0.0) duality.linear.emplace_back(prog.v[j], in.objective[j]);
  }
  for (int k = 0; k < in.num_ineq(); ++k) {
    const RhsTerm& t = in.ineq_rhs[k];
    if (t.coeff == 0.0) continue;
    switch (t.factor) {
      case RhsTerm::Factor::kConstant: duality.linear.emplace_back(prog.mu[k], -t.coeff); break;
      case RhsTerm::Factor::kKnockout: duality.quadratic.push_back({prog.y[t.reaction], prog.mu[k], -t.coeff}); break;
      case RhsTerm::Factor::kSigma: duality.quadratic.push_back({prog.sigma, prog.mu[k], -t.coeff}); break;
    }
  }
  q.rows.push_back(std::move(duality));

  // S v = 0
  std::vector<QuadRow> balance(in.num_eq());
  for (int i = 0; i < in.num_eq(); ++i) balance[i] = {"mass_balance_" + std::to_string(i), {}, {}, 0.0, 0.0};
  for (int j = 0; j < in.num_vars(); ++j) {
    for (std::size_t p = in.eq_matrix.col_begin(j); p < in.eq_matrix.col_end(j); ++p) {
      balance[in.eq_matrix.row_index(p)].linear.emplace_back(prog.v[j], in.eq_matrix.value(p));
    }
  }
  for (auto& row : balance) q.rows.push_back(std::move(row));

  // C v - b(y, sigma) <= 0
  std::vector<QuadRow> ineq(in.num_ineq());
  for (int k = 0; k < in.num_ineq(); ++k) ineq[k] = {"inner_bound_" + std::to_string(k), {}, {}, -lp::kInfinity, 0.0};
  for (int j = 0; j < in.num_vars(); ++j) {
    for (std::size_t p = in.ineq_matrix.col_begin(j); p < in.ineq_matrix.col_end(j); ++p) {
      ineq[in.ineq_matrix.row_index(p)].linear.emplace_back(prog.v[j], in.ineq_matrix.value(p));
    }
  }
  for (int k = 0; k < in.num_ineq(); ++k) {
    const RhsTerm& t = in.ineq_rhs[k];
    switch (t.factor) {
      case RhsTerm::Factor::kConstant: ineq[k].upper = t.coeff; break;
      case RhsTerm::Factor::kKnockout: ineq[k].linear.emplace_back(prog.y[t.reaction], -t.coeff); break;
      case RhsTerm::Factor::kSigma: ineq[k].linear.emplace_back(prog.sigma, -t.coeff); break;
    }
  }
  for (auto& row : ineq) q.rows.push_back(std::move(row));

  // S^T lambda + C^T mu = c
  for (int j = 0; j < in.num_vars(); ++j) {
    QuadRow row{"stationarity_" + net.column_ids[j], {}, {}, in.objective[j], in.objective[j]};
    for (std::size_t p = in.eq_matrix.col_begin(j); p < in.eq_matrix.col_end(j); ++p) {
      row.linear.emplace_back(prog.lambda[in.eq_matrix.row_index(p)], in.eq_matrix.value(p));
    }
    for (std::size_t p = in.ineq_matrix.col_begin(j); p < in.ineq_matrix.col_end(j); ++p) {
      row.linear.emplace_back(prog.mu[in.ineq_matrix.row_index(p)], in.ineq_matrix.value(p));
    }
    q.rows.push_back(std::move(row));
  }

  q.rows.push_back({"growth_floor", {{v_bio, 1.0}}, {}, prog.growth_floor, lp::kInfinity});
  q.objective_quadratic.push_back({prog.c_P, v_bio, 1.0});
  return prog;
}

std::vector<double> embed_solution(const SingleLevelProgram& program,
                                   const SimulKnockProblem& problem,
                                   const SimulKnockSolution& solution) {
  if (solution.status == SolveStatus::kInfeasible) throw std::invalid_argument("no solution to embed");
  const strain::FluxContext& ctx = *problem.context;
  std::vector<double> x(program.model.num_vars(), 0.0);
  const std::vector<double> y = ctx.knockout_vector(solution.knockouts);
  for (int i = 0; i < static_cast<int>(y.size()); ++i) x[program.y[i]] = y[i];
  for (int j = 0; j < static_cast<int>(solution.v.size()); ++j) x[program.v[j]] = solution.v[j];
  const double sigma = program.sigma >= 0 ? solution.sigma : 1.0;
  const lp::CanonicalSolution inner = lp::solve_canonical(program.inner, y, sigma);
  if (inner.status != lp::LpStatus::kOptimal) throw std::runtime_error("inner LP at solution is not optimal");
  for (int i = 0; i < static_cast<int>(inner.lambda.size()); ++i) x[program.lambda[i]] = inner.lambda[i];
  for (int k = 0; k < static_cast<int>(inner.mu.size()); ++k) x[program.mu[k]] = inner.mu[k];
  x[program.c_S] = solution.c_S;
  x[program.c_S_feed] = solution.c_S_feed;
  if (program.sigma >= 0) x[program.sigma] = solution.sigma;
  x[program.c_bio] = solution.c_bio;
  x[program.c_P] = solution.c_P;
  return x;
}

std::string export_single_level(const SingleLevelProgram& program) {
  return lp::write_lp_format(program.model);
}

}  // namespace fermko::simulknock
