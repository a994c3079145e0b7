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

#include "fermko/lp/lp_writer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace fermko::lp {
namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> sanitize_names(const std::vector<std::string>& raw, const char* fallback) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string name;
    for (char ch : raw[i]) {
      name += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') ? ch : '_';
    }
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) || name[0] == '.' ||
        name[0] == 'e' || name[0] == 'E') {
      name = std::string(fallback) + "_" + name;
    }
    if (used.count(name)) name += "_" + std::to_string(i);
    used.insert(name);
    out.push_back(name);
  }
  return out;
}

void write_linear(std::ostringstream& os, const std::vector<std::pair<int, double>>& terms,
                  const std::vector<std::string>& names, bool& first) {
  for (const auto& [j, c] : terms) {
    if (c == 0.0) continue;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const double a = std::abs(c);
    if (a != 1.0) os << format_number(a) << ' ';
    os << names[j];
    first = false;
  }
}

void write_quadratic(std::ostringstream& os, const std::vector<QuadTerm>& terms,
                     const std::vector<std::string>& names, bool& first, double scale) {
  if (terms.empty()) return;
  os << (first ? "[ " : " + [ ");
  bool inner_first = true;
  for (const QuadTerm& t : terms) {
    const double c = t.coeff * scale;
    os << (c < 0 ? (inner_first ? "-" : " - ") : (inner_first ? "" : " + "));
    os << format_number(std::abs(c)) << ' ' << names[t.i];
    if (t.i == t.j) {
      os << " ^ 2";
    } else {
      os << " * " << names[t.j];
    }
    inner_first = false;
  }
  os << " ]";
  first = false;
}

}  // namespace

int QuadraticModel::add_var(std::string name, double lower, double upper, bool binary) {
  var_names.push_back(std::move(name));
  var_lower.push_back(lower);
  var_upper.push_back(upper);
  var_binary.push_back(binary);
  return num_vars() - 1;
}

double QuadraticModel::row_activity(const QuadRow& row, const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& [j, c] : row.linear) s += c * x[j];
  for (const QuadTerm& t : row.quadratic) s += t.coeff * x[t.i] * x[t.j];
  return s;
}

double QuadraticModel::objective_value(const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& [j, c] : objective_linear) s += c * x[j];
  for (const QuadTerm& t : objective_quadratic) s += t.coeff * x[t.i] * x[t.j];
  return s;
}

double QuadraticModel::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max({worst, var_lower[j] - x[j], x[j] - var_upper[j]});
    if (var_binary[j]) worst = std::max(worst, std::abs(x[j] - std::round(x[j])));
  }
  for (const QuadRow& row : rows) {
    const double a = row_activity(row, x);
    worst = std::max({worst, row.lower - a, a - row.upper});
  }
  return worst;
}

std::string write_lp_format(const QuadraticModel& model) {
  const std::vector<std::string> names = sanitize_names(model.var_names, "x");
  std::vector<std::string> raw_rows;
  for (const QuadRow& r : model.rows) raw_rows.push_back(r.name);
  const std::vector<std::string> row_names = sanitize_names(raw_rows, "r");

  std::ostringstream os;
  os << "\\ written by fermko\n";
  os << (model.sense == Sense::kMaximize ? "Maximize\n" : "Minimize\n") << " obj: ";
  bool first = true;
  write_linear(os, model.objective_linear, names, first);
  // The LP format halves bracketed objective terms.
  write_quadratic(os, model.objective_quadratic, names, first, 2.0);
  if (!model.objective_quadratic.empty()) os << " / 2";
  if (first) os << "0 " << (names.empty() ? "" : names[0]);
  os << "\nSubject To\n";

  auto emit = [&](const QuadRow& row, const std::string& name, const char* op, double rhs) {
    os << ' ' << name << ": ";
    bool f = true;
    write_linear(os, row.linear, names, f);
    write_quadratic(os, row.quadratic, names, f, 1.0);
    if (f) os << "0 " << names[0];
    os << ' ' << op << ' ' << format_number(rhs) << '\n';
  };
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const QuadRow& row = model.rows[i];
    if (row.lower == row.upper) {
      emit(row, row_names[i], "=", row.lower);
      continue;
    }
    const bool lo = std::isfinite(row.lower);
    const bool hi = std::isfinite(row.upper);
    if (lo && hi) {
      emit(row, row_names[i] + "_lo", ">=", row.lower);
      emit(row, row_names[i] + "_hi", "<=", row.upper);
    } else if (lo) {
      emit(row, row_names[i], ">=", row.lower);
    } else if (hi) {
      emit(row, row_names[i], "<=", row.upper);
    }
  }
  os << "Bounds\n";
  for (int j = 0; j < model.num_vars(); ++j) {
    if (model.var_binary[j]) continue;
    const double lo = model.var_lower[j];
    const double hi = model.var_upper[j];
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
      os << ' ' << names[j] << " free\n";
    } else if (lo == hi) {
      os << ' ' << names[j] << " = " << format_number(lo) << '\n';
    } else {
      os << ' ' << (std::isfinite(lo) ? format_number(lo) : "-inf") << " <= " << names[j];
      if (std::isfinite(hi)) os << " <= " << format_number(hi);
      os << '\n';
    }
  }
  bool any_binary = false;
  for (int j = 0; j < model.num_vars(); ++j) {
    if (!model.var_binary[j]) continue;
    if (!any_binary) os << "Binaries\n";
    any_binary = true;
    os << ' ' << names[j] << '\n';
  }
  os << "End\n";
  return os.str();
}

std::string write_lp_format(const LpProblem& problem) {
  problem.check_dimensions();
  QuadraticModel model;
  model.sense = problem.sense;
  for (int j = 0; j < problem.num_cols(); ++j) {
    const std::string name =
        j < static_cast<int>(problem.col_names.size()) ? problem.col_names[j] : "x" + std::to_string(j);
    model.add_var(name, problem.col_lower[j], problem.col_upper[j]);
    if (problem.objective[j] != 0.0) model.objective_linear.emplace_back(j, problem.objective[j]);
  }
  const SparseMatrix at = problem.matrix.transpose();
  for (int i = 0; i < problem.num_rows(); ++i) {
    QuadRow row;
    row.name = i < static_cast<int>(problem.row_names.size()) ? problem.row_names[i]
                                                               : "r" + std::to_string(i);
    for (std::size_t k = at.col_begin(i); k < at.col_end(i); ++k) {
      row.linear.emplace_back(at.row_index(k), at.value(k));
    }
    row.lower = problem.row_lower[i];
    row.upper = problem.row_upper[i];
    model.rows.push_back(std::move(row));
  }
  return write_lp_format(model);
}

}  // namespace fermko::lp
