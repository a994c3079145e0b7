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

#ifndef FERMKO_TESTS_SUPPORT_FIXTURES_H_
#define FERMKO_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>

#include "fermko/model/model_io.h"
#include "fermko/simulknock/problem.h"
#include "fermko/strain/flux_context.h"

namespace fermko::testing {

inline std::string data_path(const std::string& name) { return std::string(FERMKO_DATA_DIR) + "/" + name; }

inline const model::MetabolicModel& toy_model() {
  static const model::MetabolicModel m =
      model::load_model(data_path("illustrative_network.json"), model::ModelFormat::kNativeJson);
  return m;
}

inline const model::MetabolicModel& core_model() {
  static const model::MetabolicModel m = model::load_model(
      data_path("e_coli_core.json"), model::ModelFormat::kCobraJson,
      {{model::ReactionRole::kSubstrateUptake, "EX_glc__D_e"},
       {model::ReactionRole::kProduct, "EX_etoh_e"},
       {model::ReactionRole::kOxygenExchange, "EX_o2_e"},
       {model::ReactionRole::kAtpm, "ATPM"}});
  return m;
}

inline std::shared_ptr<const strain::FluxContext> toy_context(bool aerobic = true) {
  strain::NetworkOptions o;
  o.aerobic = aerobic;
  return std::make_shared<strain::FluxContext>(toy_model(), o);
}

inline std::shared_ptr<const strain::FluxContext> core_context(bool aerobic = true) {
  strain::NetworkOptions o;
  o.aerobic = aerobic;
  o.substrate_uptake_max = 10.0;
  o.atpm_floor = 6.86;
  return std::make_shared<strain::FluxContext>(core_model(), o);
}

// Toy process: unit molar masses, K_MM 0.53, v_S_max 10, feed 10 g/L, f 0.1.
// The Monod variant uses v_bio_max 20 so that wild-type growth 13 stays
// below the pole.
inline simulknock::SimulKnockProblem toy_problem(bool mm, int k, bool aerobic = true) {
  simulknock::SimulKnockProblem p;
  p.context = toy_context(aerobic);
  if (mm) {
    p.kinetics = kinetics::MichaelisMentenParams{0.53, 10.0};
  } else {
    p.kinetics = kinetics::MonodParams{0.044, 20.0};
  }
  p.process.M_S = 1.0;
  p.process.M_P = 1.0;
  p.process.c_S_feed_max = 10.0;
  p.process.f = 0.1;
  p.process.aerobic = aerobic;
  p.max_knockouts = k;
  return p;
}

// Core ethanol process with the default kinetic parameters.
inline simulknock::SimulKnockProblem core_problem(bool mm, int k, bool aerobic = true) {
  simulknock::SimulKnockProblem p;
  p.context = core_context(aerobic);
  if (mm) {
    p.kinetics = kinetics::MichaelisMentenParams{};
  } else {
    p.kinetics = kinetics::MonodParams{};
  }
  p.process.aerobic = aerobic;
  p.max_knockouts = k;
  return p;
}

}  // namespace fermko::testing

#endif  // FERMKO_TESTS_SUPPORT_FIXTURES_H_
