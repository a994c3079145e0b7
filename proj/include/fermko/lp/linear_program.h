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

#ifndef FERMKO_LP_LINEAR_PROGRAM_H_
#define FERMKO_LP_LINEAR_PROGRAM_H_

#include <cstddef>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fermko::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Solver tolerances shared by every module that certifies LP results.
inline constexpr double kFeasTol = 1e-9;
inline constexpr double kDualTol = 1e-8;
inline constexpr double kDualityTol = 1e-6;
inline constexpr double kOptTol = 1e-9;

// Compressed sparse column matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  // Builds from (row, col, value) triplets; duplicates are summed and exact
  // zeros dropped.
  static SparseMatrix from_triplets(int rows, int cols,
                                    std::vector<std::tuple<int, int, double>> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }

  // Entries of column j as parallel (row, value) ranges.
  std::size_t col_begin(int j) const { return col_start_[j]; }
  std::size_t col_end(int j) const { return col_start_[j + 1]; }
  int row_index(std::size_t k) const { return row_index_[k]; }
  double value(std::size_t k) const { return values_[k]; }

  double coeff(int row, int col) const;
  SparseMatrix transpose() const;
  std::vector<double> multiply(const std::vector<double>& x) const;
  std::vector<double> multiply_transpose(const std::vector<double>& y) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<int> row_index_;
  std::vector<double> values_;
};

enum class Sense { kMaximize, kMinimize };

// General LP: optimize c^T x s.t. row_lower <= A x <= row_upper,
// col_lower <= x <= col_upper. Infinite bounds are allowed.
struct LpProblem {
  Sense sense = Sense::kMaximize;
  SparseMatrix matrix;
  std::vector<double> objective;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<double> row_lower;
  std::vector<double> row_upper;
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;

  int num_rows() const { return matrix.rows(); }
  int num_cols() const { return matrix.cols(); }
  // Throws std::invalid_argument when vector sizes disagree with the matrix.
  // Inverted bounds are legal and make the LP infeasible.
  void check_dimensions() const;
};

// Incremental builder for LpProblem.
class LpBuilder {
 public:
  explicit LpBuilder(Sense sense = Sense::kMaximize) { problem_.sense = sense; }

  int add_col(std::string name, double lower, double upper, double cost = 0.0);
  int add_row(std::string name, const std::vector<std::pair<int, double>>& coeffs,
              double lower, double upper);
  void set_cost(int col, double cost) { problem_.objective[col] = cost; }
  int num_cols() const { return static_cast<int>(problem_.objective.size()); }

  LpProblem build() const;

 private:
  LpProblem problem_;
  std::vector<std::tuple<int, int, double>> triplets_;
  int rows_ = 0;
};

}  // namespace fermko::lp

#endif  // FERMKO_LP_LINEAR_PROGRAM_H_
