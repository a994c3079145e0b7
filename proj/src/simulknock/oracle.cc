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

#include "fermko/simulknock/oracle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "fermko/lp/fractional.h"
#include "fermko/lp/simplex.h"
#include "fermko/simulknock/work_queue.h"

namespace fermko::simulknock {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kGrowthSlack = 1e-9;
constexpr int kGridPoints = 48;
constexpr int kRefinedPeaks = 3;
constexpr double kConcTol = 1e-7;  // g/L
constexpr double kMinDenominator = 1e-6;

struct Candidate {
  double sty = kNegInf;
  double d = 0.0;
  double growth = 0.0;
  double c_S = 0.0;
  std::vector<double> v;
};

double slack_below(double growth) { return growth - kGrowthSlack * (1.0 + std::abs(growth)); }

class SubsetEvaluator {
 public:
  SubsetEvaluator(const SimulKnockProblem& p, const lp::SimplexSolver& base, double floor)
      : p_(p), ctx_(*p.context), base_(base), growth_(base), product_(base), floor_(floor) {
    c_f_ = p.process.c_S_feed_max;
    ratio_ = p.process.M_P / p.process.M_S;
  }

  Candidate run(const std::vector<int>& knocked) {
    growth_ = base_;
    product_ = base_;
    ctx_.knock_out(growth_, knocked);
    ctx_.knock_out(product_, knocked);
    std::vector<double> obj(ctx_.net().n, 0.0);
    obj[ctx_.product_col()] = 1.0;
    product_.set_objective(obj);
    knocked_ = &knocked;
    return p_.is_mm() ? run_mm() : run_monod();
  }

 private:
  // max v_bio with v_S <= d; NaN if infeasible.
  double growth_at(double d) {
    const int s = ctx_.substrate_col();
    growth_.set_col_bounds(s, ctx_.net().lower[s], d);
    const lp::LpStatus st = growth_.solve();
    if (st == lp::LpStatus::kInfeasible) return std::nan("");
    if (st != lp::LpStatus::kOptimal) throw std::runtime_error("oracle FBA failed");
    return growth_.objective();
  }

  double conc(double d) const {
    const auto& k = p_.mm();
    return k.K_S_MM * d / (k.v_S_max - d);
  }

  double uptake(double c) const {
    const auto& k = p_.mm();
    return k.v_S_max * c / (c + k.K_S_MM);
  }

  Candidate at_uptake(double d) {
    Candidate c;
    c.d = d;
    const double z = growth_at(d);
    if (std::isnan(z) || z < floor_ * (1 - kGrowthSlack)) return c;
    const int b = ctx_.biomass_col();
    const int s = ctx_.substrate_col();
    product_.set_col_bounds(s, d, d);
    product_.set_col_bounds(b, std::max(ctx_.net().lower[b], slack_below(z)), ctx_.net().upper[b]);
    const lp::LpStatus st = product_.solve();
    if (st == lp::LpStatus::kInfeasible) return c;
    if (st != lp::LpStatus::kOptimal) throw std::runtime_error("oracle product LP failed");
    c.growth = z;
    c.c_S = conc(d);
    c.sty = ratio_ * product_.objective() * z * (c_f_ - c.c_S) / d;
    c.v = product_.solution().x;
    return c;
  }

  Candidate golden(double c_lo, double c_hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = c_lo, b = c_hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    Candidate f1 = at_uptake(uptake(x1)), f2 = at_uptake(uptake(x2));
    while (b - a > kConcTol) {
      if (f1.sty >= f2.sty) {
        b = x2;
        x2 = x1;
        f2 = std::move(f1);
        x1 = b - inv_phi * (b - a);
        f1 = at_uptake(uptake(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = std::move(f2);
        x2 = a + inv_phi * (b - a);
        f2 = at_uptake(uptake(x2));
      }
    }
    return f1.sty >= f2.sty ? f1 : f2;
  }

  Candidate run_mm() {
    const int s = ctx_.substrate_col();
    const double d_hi = std::min(ctx_.net().upper[s], uptake(c_f_));
    const double z_hi = growth_at(d_hi);
    if (std::isnan(z_hi) || z_hi < floor_ * (1 - kGrowthSlack)) return {};
    // Smallest uptake that still reaches the floor.
    lp::SimplexSolver min_uptake = growth_;
    const int b = ctx_.biomass_col();
    min_uptake.set_col_bounds(s, ctx_.net().lower[s], d_hi);
    min_uptake.set_col_bounds(b, std::max(ctx_.net().lower[b], floor_), ctx_.net().upper[b]);
    std::vector<double> obj(ctx_.net().n, 0.0);
    obj[s] = 1.0;
    min_uptake.set_sense(lp::Sense::kMinimize);
    min_uptake.set_objective(obj);
    if (min_uptake.solve() != lp::LpStatus::kOptimal) return {};
    const double d_lo = std::max(min_uptake.objective(), 1e-9);
    if (d_lo >= d_hi) return at_uptake(d_hi);

    std::vector<double> grid(kGridPoints + 1);
    std::vector<Candidate> values(kGridPoints + 1);
    for (int i = 0; i <= kGridPoints; ++i) {
      grid[i] = i == kGridPoints ? d_hi : d_lo + (d_hi - d_lo) * i / kGridPoints;
      values[i] = at_uptake(grid[i]);
    }
    Candidate best;
    for (const auto& c : values) {
      if (c.sty > best.sty) best = c;
    }
    std::vector<int> peaks;
    for (int i = 0; i <= kGridPoints; ++i) {
      const double left = i > 0 ? values[i - 1].sty : kNegInf;
      const double right = i < kGridPoints ? values[i + 1].sty : kNegInf;
      if (values[i].sty > kNegInf && values[i].sty >= left && values[i].sty >= right) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](int x, int y) { return values[x].sty > values[y].sty; });
    if (peaks.size() > kRefinedPeaks) peaks.resize(kRefinedPeaks);
    for (int i : peaks) {
      const double lo = conc(grid[std::max(i - 1, 0)]);
      const double hi = conc(grid[std::min(i + 1, kGridPoints)]);
      Candidate c = golden(lo, hi);
      if (c.sty > best.sty) best = std::move(c);
    }
    return best;
  }

  Candidate run_monod() {
    const auto& k = p_.monod();
    const double z = growth_at(ctx_.net().upper[ctx_.substrate_col()]);
    if (std::isnan(z) || z < floor_ * (1 - kGrowthSlack)) return {};
    if (z > kinetics::kMonodGrowthCap * k.v_bio_max) return {};
    const double c_S = kinetics::monod_substrate_conc(z, k);
    if (c_S >= c_f_) return {};

    lp::LpProblem lp = ctx_.fba_problem();
    for (int r : *knocked_) {
      for (int j : ctx_.columns_of(r)) lp.col_lower[j] = lp.col_upper[j] = 0.0;
    }
    const int b = ctx_.biomass_col();
    const int s = ctx_.substrate_col();
    lp.col_lower[b] = std::max(lp.col_lower[b], slack_below(z));
    lp.col_lower[s] = std::max(lp.col_lower[s], kMinDenominator);
    lp::LinearFractional f;
    f.numerator.assign(ctx_.net().n, 0.0);
    f.denominator.assign(ctx_.net().n, 0.0);
    f.numerator[ctx_.product_col()] = 1.0;
    f.denominator[s] = 1.0;
    const lp::FractionalResult r = lp::charnes_cooper(lp, f);
    Candidate c;
    if (r.status == lp::LpStatus::kInfeasible) return c;
    if (r.status != lp::LpStatus::kOptimal) throw std::runtime_error("oracle fractional LP failed");
    c.sty = ratio_ * r.value * z * (c_f_ - c_S);
    c.growth = z;
    c.c_S = c_S;
    c.v = r.x;
    c.d = r.x[s];
    return c;
  }

  const SimulKnockProblem& p_;
  const strain::FluxContext& ctx_;
  const lp::SimplexSolver& base_;
  lp::SimplexSolver growth_;
  lp::SimplexSolver product_;
  const std::vector<int>* knocked_ = nullptr;
  double floor_;
  double c_f_ = 0.0;
  double ratio_ = 1.0;
};

void enumerate(const std::vector<int>& items, int k, std::vector<int>& cur, int start,
               std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == k) return;
  for (int i = start; i < static_cast<int>(items.size()); ++i) {
    cur.push_back(items[i]);
    enumerate(items, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::int64_t count_subsets(int n, int k, std::int64_t guard) {
  std::int64_t total = 0;
  std::int64_t term = 1;  // C(n, i)
  for (int i = 0; i <= std::min(k, n); ++i) {
    if (i > 0) {
      term = term * (n - i + 1) / i;
    }
    total += term;
    if (total > guard || term > guard) return guard + 1;
  }
  return total;
}

SimulKnockSolution enumerate_oracle(const SimulKnockProblem& problem) {
  problem.check();
  const auto start = std::chrono::steady_clock::now();
  const strain::FluxContext& ctx = *problem.context;
  SimulKnockSolution out;
  out.certificates.aerobic = ctx.options().aerobic;

  const std::vector<int> candidates = problem.search_candidates();
  const std::int64_t n_subsets = count_subsets(static_cast<int>(candidates.size()), problem.max_knockouts);
  if (n_subsets > kOracleSubsetGuard) {
    throw OracleGuardError("oracle would enumerate more than 1e6 knockout sets");
  }
  const double floor = growth_floor(problem);
  if (!std::isfinite(floor)) return out;

  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  enumerate(candidates, problem.max_knockouts, cur, 0, subsets);

  lp::SimplexSolver base(ctx.fba_problem());
  base.solve();
  const int threads = resolve_threads(problem.threads);
  std::vector<Candidate> results(subsets.size());
  std::vector<std::unique_ptr<SubsetEvaluator>> workers(threads);
  parallel_for(static_cast<int>(subsets.size()), threads, [&](int task, int worker) {
    if (!workers[worker]) workers[worker] = std::make_unique<SubsetEvaluator>(problem, base, floor);
    std::vector<int> all = problem.fixed_knockouts;
    all.insert(all.end(), subsets[task].begin(), subsets[task].end());
    results[task] = workers[worker]->run(all);
  });
  out.stats.nodes = static_cast<long>(subsets.size());
  out.stats.evaluated = out.stats.nodes;

  double best = kNegInf;
  for (const auto& r : results) best = std::max(best, r.sty);
  if (best == kNegInf) {
    out.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }
  // Lexicographically smallest tied subset.
  int pick = -1;
  for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
    if (results[i].sty == kNegInf || !within_tie(results[i].sty, best)) continue;
    if (pick < 0 || subsets[i] < subsets[pick]) pick = i;
  }
  const Candidate& c = results[pick];
  out.status = SolveStatus::kOptimal;
  out.knockouts = problem.fixed_knockouts;
  out.knockouts.insert(out.knockouts.end(), subsets[pick].begin(), subsets[pick].end());
  std::sort(out.knockouts.begin(), out.knockouts.end());
  for (int k : out.knockouts) out.knockout_ids.push_back(ctx.reaction_id(k));
  out.v = c.v;
  out.v_bio = c.growth;
  out.v_S = c.v[ctx.substrate_col()];
  out.v_P = c.v[ctx.product_col()];
  out.sigma = problem.is_mm() ? c.d / problem.mm().v_S_max : 0.0;
  complete_process_state(problem, c.c_S, out);
  out.certificates.best_bound = out.sty;
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace fermko::simulknock
