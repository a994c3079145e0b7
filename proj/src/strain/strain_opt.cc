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

#include "fermko/strain/strain_opt.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fermko/lp/duality.h"
#include "fermko/simulknock/solver.h"
#include "fermko/simulknock/work_queue.h"

namespace fermko::strain {
namespace {

using simulknock::EvalStatus;
using simulknock::Evaluation;
using simulknock::Incumbent;
using simulknock::NodeBound;

constexpr double kGrowthSlack = 1e-9;

struct OptKnockShared {
  const FluxContext* ctx = nullptr;
  const lp::DualizedSystem* system = nullptr;
  const lp::SimplexSolver* dual_template = nullptr;
  const lp::SimplexSolver* primal_template = nullptr;
  double floor = 0.0;
};

class OptKnockWorker {
 public:
  explicit OptKnockWorker(const OptKnockShared& s)
      : s_(s), dual_(*s.dual_template), primal_(*s.primal_template) {}

  NodeBound node_bound(const std::vector<int>& knocked) {
    load(knocked);
    NodeBound nb;
    const double p = max_product(s_.floor);
    if (std::isnan(p)) {
      nb.feasible = false;
    } else {
      nb.bound = p;
    }
    return nb;
  }

  Evaluation<std::vector<double>> evaluate(const std::vector<int>& knocked, const Incumbent&) {
    load(knocked);
    Evaluation<std::vector<double>> e;
    dual_.set_objective(s_.system->dual_objective(s_.ctx->knockout_vector(knocked), 1.0));
    const lp::LpStatus st = dual_.solve();
    if (st == lp::LpStatus::kUnbounded) return e;
    if (st != lp::LpStatus::kOptimal) throw std::runtime_error("OptKnock dual LP failed");
    const double growth = dual_.objective();
    if (growth < s_.floor * (1 - kGrowthSlack)) return e;
    const double p = max_product(growth - kGrowthSlack * (1 + std::abs(growth)));
    if (std::isnan(p)) return e;
    e.status = EvalStatus::kValue;
    e.value = p;
    e.payload = primal_.solution().x;
    return e;
  }

 private:
  void load(const std::vector<int>& knocked) {
    primal_ = *s_.primal_template;
    dual_ = *s_.dual_template;
    s_.ctx->knock_out(primal_, knocked);
  }

  double max_product(double growth_min) {
    const int b = s_.ctx->biomass_col();
    const auto& net = s_.ctx->net();
    primal_.set_col_bounds(b, std::max(net.lower[b], growth_min), net.upper[b]);
    std::vector<double> obj(net.n, 0.0);
    obj[s_.ctx->product_col()] = 1.0;
    primal_.set_objective(obj);
    const lp::LpStatus st = primal_.solve();
    if (st == lp::LpStatus::kInfeasible) return std::nan("");
    if (st != lp::LpStatus::kOptimal) throw std::runtime_error("OptKnock primal LP failed");
    return primal_.objective();
  }

  const OptKnockShared& s_;
  lp::SimplexSolver dual_;
  lp::SimplexSolver primal_;
};

void fill_fluxes(const FluxContext& ctx, StrainSolution& s) {
  s.v_bio = s.v[ctx.biomass_col()];
  s.v_S = ctx.substrate_col() >= 0 ? s.v[ctx.substrate_col()] : 0.0;
  s.v_P = ctx.product_col() >= 0 ? s.v[ctx.product_col()] : 0.0;
}

}  // namespace

lp::LpSolution fba(const FluxContext& ctx, int objective_col) {
  if (objective_col < 0 || objective_col >= ctx.net().n) {
    throw std::invalid_argument("FBA objective column does not exist");
  }
  lp::LpProblem p = ctx.fba_problem();
  std::fill(p.objective.begin(), p.objective.end(), 0.0);
  p.objective[objective_col] = 1.0;
  return lp::solve_lp(p);
}

lp::LpSolution fba(const FluxContext& ctx, const std::string& reaction_id) {
  const int reaction = ctx.model().reaction_index(reaction_id);
  if (reaction < 0) throw std::invalid_argument("unknown reaction '" + reaction_id + "'");
  int col = -1;
  for (int j : ctx.columns_of(reaction)) {
    if (!ctx.net().reversed[j]) col = j;
  }
  if (col < 0) col = ctx.columns_of(reaction).front();
  return fba(ctx, col);
}

double wild_type_threshold(const FluxContext& ctx, double f) {
  if (!(f > 0.0) || f > 1.0) throw std::invalid_argument("f must be in (0, 1]");
  const lp::LpSolution wt = fba(ctx, ctx.biomass_col());
  if (wt.status != lp::LpStatus::kOptimal) {
    throw std::runtime_error("wild-type FBA is " + lp::to_string(wt.status));
  }
  return f * wt.objective;
}

StrainSolution optknock(const FluxContext& ctx, const OptKnockOptions& options) {
  if (ctx.product_col() < 0) throw std::invalid_argument("missing product role");
  if (options.max_knockouts < 0) throw std::invalid_argument("K must be >= 0");
  StrainSolution out;
  const lp::LpSolution wt = fba(ctx, ctx.biomass_col());
  if (wt.status != lp::LpStatus::kOptimal) return out;

  lp::DualizedSystem system = lp::dualize_inner(ctx.inner_lp(false, 0.0));
  lp::SimplexSolver dual_template(system.dual_lp(std::vector<double>(ctx.map().r, 1.0), 1.0));
  dual_template.solve();
  lp::SimplexSolver primal_template(ctx.fba_problem());
  primal_template.solve();

  OptKnockShared shared{&ctx, &system, &dual_template, &primal_template, options.f * wt.objective};
  simulknock::SearchOptions search;
  search.max_knockouts = options.max_knockouts;
  search.threads = options.threads;
  search.budget_seconds = options.budget_seconds;
  const std::function<std::unique_ptr<OptKnockWorker>()> make = [&] {
    return std::make_unique<OptKnockWorker>(shared);
  };
  auto result = simulknock::search_subsets<std::vector<double>, OptKnockWorker>(
      ctx.candidates(), search, make);
  out.stats = result.stats;
  if (!result.found) {
    out.status = result.stats.timed_out ? StrainStatus::kTimeout : StrainStatus::kInfeasible;
    return out;
  }
  out.status = result.stats.timed_out ? StrainStatus::kTimeout : StrainStatus::kOptimal;
  out.knockouts = result.knocked;
  for (int k : out.knockouts) out.knockout_ids.push_back(ctx.reaction_id(k));
  out.v = result.payload;
  fill_fluxes(ctx, out);
  return out;
}

SequentialResult sequential_optimize(const simulknock::SimulKnockProblem& problem) {
  problem.check();
  SequentialResult out;
  OptKnockOptions options;
  options.max_knockouts = problem.max_knockouts;
  options.f = problem.process.f;
  options.threads = problem.threads;
  options.budget_seconds = problem.budget_seconds;
  out.strain = optknock(*problem.context, options);
  if (out.strain.status != StrainStatus::kOptimal) {
    out.failed_stage = "optknock";
    out.process.status = out.strain.status == StrainStatus::kTimeout
                             ? simulknock::SolveStatus::kTimeout
                             : simulknock::SolveStatus::kInfeasible;
    out.process.certificates.aerobic = problem.context->options().aerobic;
    return out;
  }
  simulknock::SimulKnockProblem fixed = problem;
  fixed.fixed_knockouts = out.strain.knockouts;
  fixed.max_knockouts = 0;
  out.process = simulknock::solve_simulknock(fixed);
  if (out.process.status != simulknock::SolveStatus::kOptimal) out.failed_stage = "process";
  return out;
}

}  // namespace fermko::strain
