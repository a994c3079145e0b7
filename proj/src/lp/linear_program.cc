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

#include "fermko/lp/linear_program.h"

#include <algorithm>
#include <stdexcept>

namespace fermko::lp {

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), col_start_(static_cast<std::size_t>(cols) + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<std::tuple<int, int, double>> triplets) {
  for (const auto& [r, c, v] : triplets) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw std::out_of_range("sparse triplet outside matrix dimensions");
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<0>(a) < std::get<0>(b);
  });
  SparseMatrix m(rows, cols);
  m.row_index_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  std::size_t k = 0;
  for (int c = 0; c < cols; ++c) {
    while (k < triplets.size() && std::get<1>(triplets[k]) == c) {
      const int r = std::get<0>(triplets[k]);
      double v = 0.0;
      while (k < triplets.size() && std::get<1>(triplets[k]) == c &&
             std::get<0>(triplets[k]) == r) {
        v += std::get<2>(triplets[k]);
        ++k;
      }
      if (v != 0.0) {
        m.row_index_.push_back(r);
        m.values_.push_back(v);
      }
    }
    m.col_start_[c + 1] = m.values_.size();
  }
  return m;
}

double SparseMatrix::coeff(int row, int col) const {
  for (std::size_t k = col_start_[col]; k < col_start_[col + 1]; ++k) {
    if (row_index_[k] == row) return values_[k];
  }
  return 0.0;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::tuple<int, int, double>> triplets;
  triplets.reserve(values_.size());
  for (int c = 0; c < cols_; ++c) {
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      triplets.emplace_back(c, row_index_[k], values_[k]);
    }
  }
  return from_triplets(cols_, rows_, std::move(triplets));
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y(rows_, 0.0);
  for (int c = 0; c < cols_; ++c) {
    const double xc = x[c];
    if (xc == 0.0) continue;
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      y[row_index_[k]] += values_[k] * xc;
    }
  }
  return y;
}

std::vector<double> SparseMatrix::multiply_transpose(const std::vector<double>& y) const {
  std::vector<double> x(cols_, 0.0);
  for (int c = 0; c < cols_; ++c) {
    double sum = 0.0;
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      sum += values_[k] * y[row_index_[k]];
    }
    x[c] = sum;
  }
  return x;
}

void LpProblem::check_dimensions() const {
  const auto n = static_cast<std::size_t>(num_cols());
  const auto m = static_cast<std::size_t>(num_rows());
  if (objective.size() != n || col_lower.size() != n || col_upper.size() != n) {
    throw std::invalid_argument("LP column vectors do not match matrix width");
  }
  if (row_lower.size() != m || row_upper.size() != m) {
    throw std::invalid_argument("LP row bound vectors do not match matrix height");
  }
}

int LpBuilder::add_col(std::string name, double lower, double upper, double cost) {
  problem_.col_names.push_back(std::move(name));
  problem_.col_lower.push_back(lower);
  problem_.col_upper.push_back(upper);
  problem_.objective.push_back(cost);
  return static_cast<int>(problem_.objective.size()) - 1;
}

int LpBuilder::add_row(std::string name, const std::vector<std::pair<int, double>>& coeffs,
                       double lower, double upper) {
  for (const auto& [col, value] : coeffs) triplets_.emplace_back(rows_, col, value);
  problem_.row_names.push_back(std::move(name));
  problem_.row_lower.push_back(lower);
  problem_.row_upper.push_back(upper);
  return rows_++;
}

LpProblem LpBuilder::build() const {
  LpProblem out = problem_;
  out.matrix = SparseMatrix::from_triplets(rows_, num_cols(), triplets_);
  return out;
}

}  // namespace fermko::lp
