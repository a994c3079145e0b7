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

#ifndef FERMKO_LP_LP_WRITER_H_
#define FERMKO_LP_LP_WRITER_H_

#include <string>
#include <utility>
#include <vector>

#include "fermko/lp/linear_program.h"

namespace fermko::lp {

struct QuadTerm {
  int i = 0;
  int j = 0;
  double coeff = 0.0;
};

struct QuadRow {
  std::string name;
  std::vector<std::pair<int, double>> linear;
  std::vector<QuadTerm> quadratic;
  double lower = -kInfinity;
  double upper = kInfinity;
};

// Mixed-integer QCQP in a solver-neutral form, used for export and for
// residual evaluation.
struct QuadraticModel {
  Sense sense = Sense::kMaximize;
  std::vector<std::string> var_names;
  std::vector<double> var_lower;
  std::vector<double> var_upper;
  std::vector<bool> var_binary;
  std::vector<std::pair<int, double>> objective_linear;
  std::vector<QuadTerm> objective_quadratic;
  std::vector<QuadRow> rows;

  int num_vars() const { return static_cast<int>(var_names.size()); }
  int add_var(std::string name, double lower, double upper, bool binary = false);
  double row_activity(const QuadRow& row, const std::vector<double>& x) const;
  double objective_value(const std::vector<double>& x) const;
  // Largest bound or row violation at x (binaries also checked for
  // integrality).
  double max_violation(const std::vector<double>& x) const;
};

// Text in the CPLEX LP file format. Names are sanitized and made unique.
std::string write_lp_format(const QuadraticModel& model);
std::string write_lp_format(const LpProblem& problem);

}  // namespace fermko::lp

#endif  // FERMKO_LP_LP_WRITER_H_
