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

#include "fermko/cli/runner.h"

#include <filesystem>
#include <memory>

#include "fermko/chemostat/chemostat.h"
#include "fermko/model/metabolic_model.h"
#include "fermko/model/model_io.h"
#include "fermko/simulknock/single_level.h"
#include "fermko/simulknock/solver.h"
#include "fermko/strain/strain_opt.h"

namespace fermko::cli {
namespace {

using model::ReactionRole;

model::MetabolicModel load(const RunConfig& c) {
  model::RoleOverrides overrides;
  if (!c.target.empty()) overrides[ReactionRole::kProduct] = c.target;
  if (!c.substrate.empty()) overrides[ReactionRole::kSubstrateUptake] = c.substrate;
  if (!c.oxygen.empty()) overrides[ReactionRole::kOxygenExchange] = c.oxygen;
  if (!c.atpm.empty()) overrides[ReactionRole::kAtpm] = c.atpm;
  try {
    return model::load_model(c.model_path, c.format, overrides);
  } catch (const model::ParseError& e) {
    throw IoError(e.what());
  } catch (const model::ModelError& e) {
    throw ConfigError(e.what());
  }
}

kinetics::KineticsSpec make_kinetics(const RunConfig& c) {
  const ParameterOverrides& p = c.params;
  if (c.kinetics == kinetics::KineticsKind::kMonod) {
    kinetics::MonodParams m;
    if (p.K_S) m.K_S = *p.K_S;
    if (p.v_bio_max) m.v_bio_max = *p.v_bio_max;
    return m;
  }
  kinetics::MichaelisMentenParams m;
  if (p.K_S_MM) m.K_S_MM = *p.K_S_MM;
  if (p.v_S_max) m.v_S_max = *p.v_S_max;
  return m;
}

simulknock::SimulKnockProblem problem_for(const RunConfig& c, const model::MetabolicModel& m, bool aerobic) {
  strain::NetworkOptions options;
  options.aerobic = aerobic;
  options.substrate_uptake_max = c.params.glucose_ub;
  options.atpm_floor = c.params.atpm_floor.value_or(chemostat::kDefaultAtpmFloor);
  options.extra_protected = c.protected_reactions;
  for (const auto& id : options.extra_protected) {
    if (m.reaction_index(id) < 0) throw ConfigError("protected reaction '" + id + "' does not exist");
  }
  simulknock::SimulKnockProblem p;
  try {
    p.context = std::make_shared<strain::FluxContext>(m, options);
  } catch (const model::ModelError& e) {
    throw ConfigError(e.what());
  }
  p.kinetics = make_kinetics(c);
  const ParameterOverrides& o = c.params;
  if (o.c_S_feed_max) p.process.c_S_feed_max = *o.c_S_feed_max;
  if (o.M_S) p.process.M_S = *o.M_S;
  if (o.M_P) p.process.M_P = *o.M_P;
  if (o.f) p.process.f = *o.f;
  p.process.aerobic = aerobic;
  p.max_knockouts = c.max_knockouts;
  p.threads = c.threads;
  p.budget_seconds = c.budget_seconds;
  return p;
}

std::string status_text(simulknock::SolveStatus s) { return simulknock::to_string(s); }

std::string status_text(strain::StrainStatus s) {
  switch (s) {
    case strain::StrainStatus::kOptimal: return "optimal";
    case strain::StrainStatus::kInfeasible: return "infeasible";
    case strain::StrainStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

void set_fluxes(ResultRecord& r, double v_bio, double v_S, double v_P) {
  r.v_bio = v_bio;
  r.v_S = v_S;
  r.v_P = v_P;
  if (v_S > 0) r.molar_yield = v_P / v_S;
}

void fill_process(ResultRecord& r, const simulknock::SimulKnockSolution& s) {
  r.knockouts = s.knockout_ids;
  r.status = status_text(s.status);
  if (s.status == simulknock::SolveStatus::kInfeasible) return;
  r.sty = s.sty;
  r.c_P = s.c_P;
  r.c_S = s.c_S;
  r.c_bio = s.c_bio;
  set_fluxes(r, s.v_bio, s.v_S, s.v_P);
}

// Value used to pick the better aeration.
double merit(const ResultRecord& r, Command command) {
  if (r.status != "optimal") return -1.0;
  switch (command) {
    case Command::kFba: return r.v_bio.value_or(-1.0);
    case Command::kOptKnock: return r.v_P.value_or(-1.0);
    default: return r.sty.value_or(-1.0);
  }
}

std::string lp_path_for(const std::string& path, const char* suffix) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

ResultRecord run_one(const RunConfig& c, const simulknock::SimulKnockProblem& p) {
  const Command command = *c.command;
  const strain::FluxContext& ctx = *p.context;
  ResultRecord r;
  r.chemical = c.chemical_label();
  r.method = to_string(command);
  r.max_knockouts = c.max_knockouts;
  if (command == Command::kSequential || command == Command::kSimulKnock) {
    r.kinetics = kinetics::to_string(c.kinetics);
  }
  switch (command) {
    case Command::kFba: {
      const lp::LpSolution s = strain::fba(ctx, ctx.biomass_col());
      r.status = s.status == lp::LpStatus::kOptimal ? "optimal" : "infeasible";
      if (s.status == lp::LpStatus::kOptimal) {
        const double v_S = ctx.substrate_col() >= 0 ? s.x[ctx.substrate_col()] : 0.0;
        const double v_P = ctx.product_col() >= 0 ? s.x[ctx.product_col()] : 0.0;
        set_fluxes(r, s.x[ctx.biomass_col()], v_S, v_P);
        if (ctx.product_col() < 0) r.v_P.reset(), r.molar_yield.reset();
      }
      break;
    }
    case Command::kOptKnock: {
      strain::OptKnockOptions o;
      o.max_knockouts = p.max_knockouts;
      o.f = p.process.f;
      o.threads = p.threads;
      o.budget_seconds = p.budget_seconds;
      const strain::StrainSolution s = strain::optknock(ctx, o);
      r.knockouts = s.knockout_ids;
      r.status = status_text(s.status);
      if (s.status != strain::StrainStatus::kInfeasible) set_fluxes(r, s.v_bio, s.v_S, s.v_P);
      break;
    }
    case Command::kSequential: {
      const strain::SequentialResult s = strain::sequential_optimize(p);
      fill_process(r, s.process);
      if (!s.failed_stage.empty()) {
        r.status += ":" + s.failed_stage;
        if (s.failed_stage == "process") r.knockouts = s.strain.knockout_ids;
      }
      break;
    }
    case Command::kSimulKnock: fill_process(r, simulknock::solve_simulknock(p)); break;
  }
  return r;
}

int exit_code_for(const std::string& status) {
  if (status == "optimal") return kExitOptimal;
  if (status.rfind("timeout", 0) == 0) return kExitTimeout;
  return kExitInfeasible;
}

}  // namespace

simulknock::SimulKnockProblem build_problem(const RunConfig& config, bool aerobic) {
  config.validate();
  return problem_for(config, load(config), aerobic);
}

RunOutcome run(const RunConfig& config) {
  config.validate();
  if (!config.export_lp.empty() && *config.command != Command::kSimulKnock) {
    throw ConfigError("--export-lp applies to the simulknock command only");
  }
  const model::MetabolicModel m = load(config);
  std::vector<bool> aerations;
  if (config.aerobic != Aeration::kOff) aerations.push_back(true);
  if (config.aerobic != Aeration::kOn) aerations.push_back(false);

  RunOutcome outcome;
  for (bool aerobic : aerations) {
    const simulknock::SimulKnockProblem p = problem_for(config, m, aerobic);
    if (*config.command != Command::kFba) {
      try {
        p.check();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (!config.export_lp.empty()) {
      const std::string path = aerations.size() == 1
                                   ? config.export_lp
                                   : lp_path_for(config.export_lp, aerobic ? "_aerobic" : "_anaerobic");
      write_text(path, simulknock::export_single_level(simulknock::assemble_single_level(p)));
    }
    ResultRecord r = run_one(config, p);
    if (aerations.size() > 1) r.aerobic = aerobic;
    outcome.records.push_back(std::move(r));
  }
  if (aerations.size() > 1) {
    // The aerobic row wins ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < outcome.records.size(); ++i) {
      if (merit(outcome.records[i], *config.command) > merit(outcome.records[best], *config.command)) best = i;
    }
    for (std::size_t i = 0; i < outcome.records.size(); ++i) outcome.records[i].best = i == best;
    outcome.exit_code = exit_code_for(outcome.records[best].status);
  } else {
    outcome.exit_code = exit_code_for(outcome.records.front().status);
  }
  return outcome;
}

int run_and_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RunOutcome outcome = run(config);
    const std::string text = emit_report(outcome.records, config.report);
    if (config.out_path.empty()) {
      out << text;
      out.flush();
      if (!out) throw IoError("failed writing report to standard output");
    } else {
      write_text(config.out_path, text);
    }
    for (const auto& r : outcome.records) {
      if (r.status != "optimal") err << r.method << ": " << r.status << "\n";
    }
    return outcome.exit_code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace fermko::cli
