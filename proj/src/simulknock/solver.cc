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

#include "fermko/simulknock/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "fermko/lp/duality.h"
#include "fermko/lp/fractional.h"
#include "fermko/lp/simplex.h"

namespace fermko::simulknock {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kGrowthSlack = 1e-9;   // relative slack on v_bio >= D
constexpr double kIntervalGap = 1e-9;   // relative B&B gap on sigma
constexpr double kMinConcWidth = 1e-9;  // g/L, smallest sigma interval in c_S
constexpr double kMinUptake = 1e-9;
constexpr double kMinRatioUptake = 1e-6;
constexpr int kInitialIntervals = 8;
constexpr int kMaxIntervalSplits = 4000;

struct Point {
  double d = 0.0;
  double growth = 0.0;
  double c_S = 0.0;
  std::vector<double> v;
};

struct Shared {
  const SimulKnockProblem* problem = nullptr;
  lp::DualizedSystem* system = nullptr;
  const lp::SimplexSolver* dual_template = nullptr;
  const lp::SimplexSolver* primal_template = nullptr;
  double floor = 0.0;
  double d_hi = 0.0;
  double mass_ratio = 1.0;  // M_P / M_S
};

class Eq8Worker {
 public:
  explicit Eq8Worker(const Shared& shared)
      : s_(shared),
        ctx_(*shared.problem->context),
        dual_(*shared.dual_template),
        primal_(*shared.primal_template) {}

  NodeBound node_bound(const std::vector<int>& knocked) {
    load(knocked);
    const double floor = s_.floor;
    NodeBound nb;
    const double b_max = primal_opt(ctx_.biomass_col(), +1, kNegInf, 0.0, s_.d_hi);
    if (std::isnan(b_max) || b_max < floor * (1 - kGrowthSlack)) {
      nb.feasible = false;
      return nb;
    }
    const double p_max = primal_opt(ctx_.product_col(), +1, floor, 0.0, s_.d_hi);
    const double d_lo = -primal_opt(ctx_.substrate_col(), -1, floor, 0.0, s_.d_hi);
    if (std::isnan(p_max) || std::isnan(d_lo)) {
      nb.feasible = false;
      return nb;
    }
    const double c_f = s_.problem->process.c_S_feed_max;
    if (s_.problem->is_mm()) {
      const double d = std::max(d_lo, kMinUptake);
      nb.bound = s_.mass_ratio * p_max * b_max * (c_f - conc_mm(d)) / d;
    } else {
      const auto& k = s_.problem->monod();
      const double cap = kinetics::kMonodGrowthCap * k.v_bio_max;
      if (floor > cap) {
        nb.feasible = false;
        return nb;
      }
      const double d = std::max(d_lo, kMinRatioUptake);
      nb.bound = s_.mass_ratio * (p_max / d) * std::min(b_max, cap) *
                 (c_f - kinetics::monod_substrate_conc(floor, k));
    }
    nb.bound = std::max(nb.bound, 0.0);
    return nb;
  }

  Evaluation<Point> evaluate(const std::vector<int>& knocked, const Incumbent& incumbent) {
    load(knocked);
    return s_.problem->is_mm() ? evaluate_mm(incumbent) : evaluate_monod();
  }

 private:
  void load(const std::vector<int>& knocked) {
    std::vector<int> all = s_.problem->fixed_knockouts;
    all.insert(all.end(), knocked.begin(), knocked.end());
    dual_ = *s_.dual_template;
    primal_ = *s_.primal_template;
    ctx_.knock_out(primal_, all);
    y_ = ctx_.knockout_vector(all);
    growth_cache_.clear();
  }

  double conc_mm(double d) const {
    const auto& k = s_.problem->mm();
    return k.K_S_MM * d / (k.v_S_max - d);
  }

  // Optimal inner growth from the dual LP; -inf when the inner LP is
  // infeasible (dual unbounded).
  double inner_growth(double sigma) {
    auto it = growth_cache_.find(sigma);
    if (it != growth_cache_.end()) return it->second;
    dual_.set_objective(s_.system->dual_objective(y_, sigma));
    const lp::LpStatus st = dual_.solve();
    double value = kNegInf;
    if (st == lp::LpStatus::kOptimal) {
      value = dual_.objective();
    } else if (st != lp::LpStatus::kUnbounded) {
      // Retry from the canonical basis before giving up.
      dual_ = *s_.dual_template;
      dual_.set_objective(s_.system->dual_objective(y_, sigma));
      const lp::LpStatus again = dual_.solve();
      if (again == lp::LpStatus::kOptimal) value = dual_.objective();
      else if (again != lp::LpStatus::kUnbounded) throw std::runtime_error("dual LP failed: " + lp::to_string(again));
    }
    growth_cache_.emplace(sigma, value);
    return value;
  }

  // Optimizes sign * v[col] with v_bio >= growth_min and v_S in [s_lo, s_hi];
  // NaN when infeasible. Returns sign * optimum, i.e. the signed objective.
  double primal_opt(int col, int sign, double growth_min, double s_lo, double s_hi) {
    set_primal_bounds(growth_min, s_lo, s_hi);
    std::vector<double> obj(ctx_.net().n, 0.0);
    obj[col] = sign;
    primal_.set_objective(obj);
    const lp::LpStatus st = primal_.solve();
    if (st == lp::LpStatus::kInfeasible) return std::nan("");
    if (st != lp::LpStatus::kOptimal) throw std::runtime_error("primal LP failed: " + lp::to_string(st));
    return primal_.objective();
  }

  void set_primal_bounds(double growth_min, double s_lo, double s_hi) {
    const auto& net = ctx_.net();
    const int b = ctx_.biomass_col();
    const int s = ctx_.substrate_col();
    primal_.set_col_bounds(b, std::max(net.lower[b], growth_min), net.upper[b]);
    primal_.set_col_bounds(s, std::max(net.lower[s], s_lo), std::min(net.upper[s], s_hi));
  }

  double growth_floor_with_slack(double growth) const {
    return growth - kGrowthSlack * (1.0 + std::abs(growth));
  }

  // STY at uptake d, or -inf when no inner-optimal flux has v_S = d.
  double point_value(double d, Point* out) {
    const auto& k = s_.problem->mm();
    const double growth = inner_growth(d / k.v_S_max);
    if (growth < s_.floor * (1 - kGrowthSlack)) return kNegInf;
    const double p = primal_opt(ctx_.product_col(), +1, growth_floor_with_slack(growth), d, d);
    if (std::isnan(p)) return kNegInf;
    const double c_S = conc_mm(d);
    const double value = s_.mass_ratio * p * growth * (s_.problem->process.c_S_feed_max - c_S) / d;
    if (out != nullptr) *out = Point{d, growth, c_S, primal_.solution().x};
    return value;
  }

  double interval_bound(double dl, double du) {
    const auto& k = s_.problem->mm();
    const double g_lo = inner_growth(dl / k.v_S_max);
    const double g_hi = inner_growth(du / k.v_S_max);
    if (g_hi < s_.floor * (1 - kGrowthSlack)) return kNegInf;
    const double need = growth_floor_with_slack(std::max(g_lo, s_.floor));
    const double p_up = primal_opt(ctx_.product_col(), +1, need, dl, du);
    if (std::isnan(p_up)) return kNegInf;
    return s_.mass_ratio * p_up * g_hi * (s_.problem->process.c_S_feed_max - conc_mm(dl)) / dl;
  }

  Evaluation<Point> evaluate_mm(const Incumbent& incumbent) {
    Evaluation<Point> e;
    const double floor = s_.floor;
    const double min_uptake = -primal_opt(ctx_.substrate_col(), -1, floor, 0.0, s_.d_hi);
    if (std::isnan(min_uptake)) return e;
    const double d_lo = std::max(min_uptake, kMinUptake);
    const double d_hi = s_.d_hi;
    if (d_lo > d_hi) return e;

    double best = kNegInf;
    Point best_point;
    auto consider = [&](double d) {
      Point pt;
      const double v = point_value(d, &pt);
      if (v > best) {
        best = v;
        best_point = std::move(pt);
      }
    };
    struct Interval {
      double bound, dl, du;
      bool operator<(const Interval& o) const {
        return bound != o.bound ? bound < o.bound : dl > o.dl;
      }
    };
    std::priority_queue<Interval> open;
    if (d_hi - d_lo <= 1e-12 * (1 + d_hi)) {
      consider(d_lo);
    } else {
      std::vector<double> grid(kInitialIntervals + 1);
      for (int i = 0; i <= kInitialIntervals; ++i) {
        grid[i] = d_lo + (d_hi - d_lo) * i / kInitialIntervals;
      }
      grid.back() = d_hi;
      for (double d : grid) consider(d);
      for (int i = 0; i < kInitialIntervals; ++i) {
        const double b = interval_bound(grid[i], grid[i + 1]);
        if (b > kNegInf) open.push({b, grid[i], grid[i + 1]});
      }
    }
    // True when a bound can still improve on the local best.
    auto improves = [&](double bound) {
      if (best == kNegInf) return bound > kNegInf;
      return bound > best + kIntervalGap * std::abs(best);
    };
    double unresolved = kNegInf;
    int splits = 0;
    while (!open.empty()) {
      const Interval top = open.top();
      if (!improves(top.bound)) break;
      if (std::max({best, top.bound, unresolved}) < incumbent.prune_threshold()) {
        e.status = EvalStatus::kAbandoned;
        return e;
      }
      open.pop();
      if (conc_mm(top.du) - conc_mm(top.dl) < kMinConcWidth || splits >= kMaxIntervalSplits) {
        unresolved = std::max(unresolved, top.bound);
        continue;
      }
      ++splits;
      const double mid = 0.5 * (top.dl + top.du);
      consider(mid);
      for (const auto& [a, b] : {std::pair{top.dl, mid}, std::pair{mid, top.du}}) {
        const double bound = interval_bound(a, b);
        if (improves(bound)) open.push({bound, a, b});
      }
    }
    if (best == kNegInf) return e;
    e.status = EvalStatus::kValue;
    e.value = best;
    e.payload = std::move(best_point);
    return e;
  }

  Evaluation<Point> evaluate_monod() {
    Evaluation<Point> e;
    const auto& k = s_.problem->monod();
    const double growth = inner_growth(1.0);
    if (growth < s_.floor * (1 - kGrowthSlack)) return e;
    if (growth > kinetics::kMonodGrowthCap * k.v_bio_max) return e;
    const double c_S = kinetics::monod_substrate_conc(growth, k);
    const double c_f = s_.problem->process.c_S_feed_max;
    if (c_S >= c_f) return e;
    set_primal_bounds(growth_floor_with_slack(growth), kMinRatioUptake, s_.d_hi);
    lp::LinearFractional f;
    f.numerator.assign(ctx_.net().n, 0.0);
    f.denominator.assign(ctx_.net().n, 0.0);
    f.numerator[ctx_.product_col()] = 1.0;
    f.denominator[ctx_.substrate_col()] = 1.0;
    const lp::FractionalResult r = lp::dinkelbach(primal_, f);
    if (r.status == lp::LpStatus::kInfeasible) return e;
    if (r.status != lp::LpStatus::kOptimal) throw std::runtime_error("fractional subproblem failed");
    e.status = EvalStatus::kValue;
    e.value = s_.mass_ratio * r.value * growth * (c_f - c_S);
    e.payload = Point{r.x[ctx_.substrate_col()], growth, c_S, r.x};
    return e;
  }

  const Shared& s_;
  const strain::FluxContext& ctx_;
  lp::SimplexSolver dual_;
  lp::SimplexSolver primal_;
  std::vector<double> y_;
  std::map<double, double> growth_cache_;
};

}  // namespace

SimulKnockSolution solve_simulknock(const SimulKnockProblem& problem) {
  problem.check();
  const strain::FluxContext& ctx = *problem.context;
  SimulKnockSolution out;
  out.certificates.aerobic = ctx.options().aerobic;

  Shared shared;
  shared.problem = &problem;
  shared.floor = growth_floor(problem);
  shared.d_hi = max_uptake(problem);
  shared.mass_ratio = problem.process.M_P / problem.process.M_S;
  if (!std::isfinite(shared.floor)) return out;

  const double v_S_max = problem.is_mm() ? problem.mm().v_S_max : 0.0;
  lp::DualizedSystem system = lp::dualize_inner(ctx.inner_lp(problem.is_mm(), v_S_max));
  const std::vector<double> ones(ctx.map().r, 1.0);
  lp::SimplexSolver dual_template(system.dual_lp(ones, 1.0));
  dual_template.solve();
  lp::SimplexSolver primal_template(ctx.fba_problem());
  primal_template.solve();
  shared.system = &system;
  shared.dual_template = &dual_template;
  shared.primal_template = &primal_template;

  SearchOptions options;
  options.max_knockouts = problem.max_knockouts;
  options.threads = problem.threads;
  options.budget_seconds = problem.budget_seconds;
  const std::function<std::unique_ptr<Eq8Worker>()> make = [&] {
    return std::make_unique<Eq8Worker>(shared);
  };
  SearchResult<Point> result =
      search_subsets<Point, Eq8Worker>(problem.search_candidates(), options, make);
  out.stats = result.stats;
  if (!result.found) {
    out.status = result.stats.timed_out ? SolveStatus::kTimeout : SolveStatus::kInfeasible;
    return out;
  }
  out.status = result.stats.timed_out ? SolveStatus::kTimeout : SolveStatus::kOptimal;
  out.knockouts = problem.fixed_knockouts;
  out.knockouts.insert(out.knockouts.end(), result.knocked.begin(), result.knocked.end());
  std::sort(out.knockouts.begin(), out.knockouts.end());
  for (int k : out.knockouts) out.knockout_ids.push_back(ctx.reaction_id(k));

  const Point& pt = result.payload;
  out.v = pt.v;
  // Growth is the certified inner optimum; the flux vector attains it
  // within the growth slack.
  out.v_bio = pt.growth;
  out.v_S = pt.v[ctx.substrate_col()];
  out.v_P = pt.v[ctx.product_col()];
  out.sigma = problem.is_mm() ? pt.d / problem.mm().v_S_max : 0.0;
  complete_process_state(problem, pt.c_S, out);

  // Certificate: primal and dual inner values at the chosen point.
  const std::vector<double> y = ctx.knockout_vector(out.knockouts);
  const double sigma = problem.is_mm() ? out.sigma : 1.0;
  const lp::CanonicalSolution inner = lp::solve_canonical(system.lp(), y, sigma);
  if (inner.status == lp::LpStatus::kOptimal) {
    const lp::DualityCertificate cert = lp::check_strong_duality(
        inner.v, lp::DualSolution{inner.lambda, inner.mu}, system.lp(), y, sigma);
    out.certificates.duality_gap = cert.gap;
    out.certificates.duality_certified = cert.certified;
  }
  out.certificates.best_bound = result.stats.timed_out ? result.stats.best_bound : out.sty;
  return out;
}

}  // namespace fermko::simulknock
