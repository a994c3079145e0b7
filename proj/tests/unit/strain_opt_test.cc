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

#include <gtest/gtest.h>

#include <cmath>

#include "fermko/simulknock/oracle.h"
#include "fermko/strain/strain_opt.h"
#include "support/fixtures.h"

namespace fermko::strain {
namespace {

using testing::core_context;
using testing::toy_context;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(FbaTest, IllustrativeWildType) {
  const auto ctx = toy_context();
  const lp::LpSolution s = fba(*ctx, ctx->biomass_col());
  ASSERT_EQ(s.status, lp::LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 13.0, 1e-9);
  EXPECT_NEAR(s.x[ctx->substrate_col()], 10.0, 1e-9);
  EXPECT_NEAR(s.x[ctx->oxygen_col()], 3.0, 1e-9);
  EXPECT_NEAR(s.x[ctx->product_col()], 0.0, 1e-9);
  EXPECT_NEAR(fba(*ctx, "BIO").objective, 13.0, 1e-9);
}

TEST(FbaTest, ClosedUptakeGivesNoGrowthOrInfeasible) {
  NetworkOptions o;
  o.substrate_uptake_max = 0.0;
  const FluxContext toy(testing::toy_model(), o);
  const lp::LpSolution s = fba(toy, toy.biomass_col());
  ASSERT_EQ(s.status, lp::LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 0.0, 1e-12);
  // The core model cannot meet its ATP maintenance floor without carbon.
  o.atpm_floor = 6.86;
  const FluxContext core(testing::core_model(), o);
  EXPECT_EQ(fba(core, core.biomass_col()).status, lp::LpStatus::kInfeasible);
  EXPECT_THROW(wild_type_threshold(core, 0.1), std::runtime_error);
}

TEST(FbaTest, CoreWildTypeGrowth) {
  NetworkOptions o;
  o.substrate_uptake_max = 10.0;
  o.atpm_floor = 8.39;
  const FluxContext native(testing::core_model(), o);
  EXPECT_NEAR(fba(native, native.biomass_col()).objective, 0.8739, 1e-4);
  // A lower maintenance floor leaves more ATP for growth.
  const auto ctx = core_context();
  const lp::LpSolution s = fba(*ctx, ctx->biomass_col());
  ASSERT_EQ(s.status, lp::LpStatus::kOptimal);
  EXPECT_GT(s.objective, 0.8739);
  EXPECT_NEAR(s.x[ctx->substrate_col()], 10.0, 1e-9);
}

TEST(WildTypeThresholdTest, Examples) {
  const auto toy = toy_context();
  EXPECT_NEAR(wild_type_threshold(*toy, 0.1), 1.3, 1e-9);
  EXPECT_NEAR(wild_type_threshold(*toy, 1.0), 13.0, 1e-9);
  EXPECT_THROW(wild_type_threshold(*toy, 0.0), std::invalid_argument);
  EXPECT_THROW(wild_type_threshold(*toy, 1.5), std::invalid_argument);
  const auto core = core_context();
  EXPECT_NEAR(wild_type_threshold(*core, 0.1), 0.1 * fba(*core, core->biomass_col()).objective, 1e-12);
}

StrainSolution run_optknock(const FluxContext& ctx, int k) {
  OptKnockOptions o;
  o.max_knockouts = k;
  return optknock(ctx, o);
}

TEST(OptKnockTest, IllustrativeNetwork) {
  const auto ctx = toy_context();
  const StrainSolution k0 = run_optknock(*ctx, 0);
  ASSERT_EQ(k0.status, StrainStatus::kOptimal);
  EXPECT_TRUE(k0.knockouts.empty());
  EXPECT_NEAR(k0.v_P, 0.0, 1e-6);

  const StrainSolution k1 = run_optknock(*ctx, 1);
  ASSERT_EQ(k1.status, StrainStatus::kOptimal);
  EXPECT_EQ(k1.knockout_ids, (std::vector<std::string>{"B-C"}));
  EXPECT_NEAR(k1.v_bio, 9.5, 9.5 * 0.005);
  EXPECT_NEAR(k1.v_P, 3.5, 3.5 * 0.005);

  const StrainSolution k2 = run_optknock(*ctx, 2);
  EXPECT_EQ(k2.knockout_ids, (std::vector<std::string>{"B-C", "F-C"}));
}

TEST(OptKnockTest, ReturnedFluxIsInnerOptimal) {
  for (const auto& ctx : {toy_context(), core_context()}) {
    for (int k = 1; k <= 2; ++k) {
      const StrainSolution s = run_optknock(*ctx, k);
      ASSERT_EQ(s.status, StrainStatus::kOptimal);
      lp::LpProblem p = ctx->fba_problem();
      for (int r : s.knockouts) {
        for (int j : ctx->columns_of(r)) p.col_lower[j] = p.col_upper[j] = 0.0;
      }
      const lp::LpSolution f = lp::solve_lp(p);
      ASSERT_EQ(f.status, lp::LpStatus::kOptimal);
      EXPECT_NEAR(f.objective, s.v_bio, 1e-6);
      EXPECT_GE(s.v_bio, wild_type_threshold(*ctx, 0.1) - 1e-9);
    }
  }
}

TEST(OptKnockTest, ObjectiveNonDecreasingInK) {
  const auto ctx = toy_context();
  double prev = -1.0;
  for (int k = 0; k <= 3; ++k) {
    const StrainSolution s = run_optknock(*ctx, k);
    ASSERT_EQ(s.status, StrainStatus::kOptimal);
    EXPECT_GE(s.v_P, prev - 1e-9);
    prev = s.v_P;
  }
}

TEST(OptKnockTest, SerialAndParallelAgree) {
  const auto ctx = core_context(false);
  OptKnockOptions o;
  o.max_knockouts = 1;
  const StrainSolution a = optknock(*ctx, o);
  o.threads = 4;
  const StrainSolution b = optknock(*ctx, o);
  EXPECT_EQ(a.knockouts, b.knockouts);
  EXPECT_EQ(a.v_P, b.v_P);
}

TEST(SequentialTest, IllustrativeRow) {
  const SequentialResult r = sequential_optimize(testing::toy_problem(true, 1));
  ASSERT_TRUE(r.failed_stage.empty());
  const auto& s = r.process;
  EXPECT_EQ(s.knockout_ids, (std::vector<std::string>{"B-C"}));
  EXPECT_LE(rel(s.sty, 21.0), 0.005);
  EXPECT_LE(rel(s.c_bio, 8.7), 0.005);
  EXPECT_LE(rel(s.c_P, 2.5), 0.005);
  EXPECT_LE(rel(s.v_S, 7.8), 0.005);
  EXPECT_LE(rel(s.v_bio, 8.4), 0.005);
  EXPECT_LE(rel(s.v_P, 2.4), 0.006);
}

TEST(SequentialTest, NoKnockoutsMatchesOracleWildType) {
  const auto p = testing::toy_problem(true, 0, false);
  const SequentialResult r = sequential_optimize(p);
  const auto o = simulknock::enumerate_oracle(p);
  ASSERT_EQ(o.status, simulknock::SolveStatus::kOptimal);
  EXPECT_TRUE(r.process.knockouts.empty());
  EXPECT_NEAR(r.process.sty, o.sty, 1e-5 * o.sty + 1e-6);
}

TEST(SequentialTest, ReportsFailingStage) {
  auto p = testing::toy_problem(false, 1);
  p.kinetics = kinetics::MonodParams{0.044, 5.0};  // every growth rate above the floor is past the pole
  const SequentialResult r = sequential_optimize(p);
  EXPECT_EQ(r.failed_stage, "process");
  EXPECT_EQ(r.process.status, simulknock::SolveStatus::kInfeasible);
}

}  // namespace
}  // namespace fermko::strain
