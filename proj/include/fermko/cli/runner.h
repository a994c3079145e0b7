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

#ifndef FERMKO_CLI_RUNNER_H_
#define FERMKO_CLI_RUNNER_H_

#include <ostream>
#include <vector>

#include "fermko/cli/report.h"
#include "fermko/cli/run_config.h"
#include "fermko/simulknock/problem.h"

namespace fermko::cli {

enum ExitCode : int {
  kExitOptimal = 0,
  kExitInternal = 1,
  kExitInfeasible = 2,
  kExitTimeout = 3,
  kExitConfig = 4,
  kExitIo = 5,
};

struct RunOutcome {
  std::vector<ResultRecord> records;
  int exit_code = kExitOptimal;
};

// Loads the model, runs the command once per requested aeration and builds
// one record per run. Errors raise ConfigError, IoError or model exceptions;
// solver statuses land in the records and the exit code.
RunOutcome run(const RunConfig& config);

// run() plus reporting; every failure becomes an exit code with a message
// on `err`. Nothing is written when the run fails before producing records.
int run_and_report(const RunConfig& config, std::ostream& out, std::ostream& err);

// Problem for one aeration, as run() builds it.
simulknock::SimulKnockProblem build_problem(const RunConfig& config, bool aerobic);

}  // namespace fermko::cli

#endif  // FERMKO_CLI_RUNNER_H_
