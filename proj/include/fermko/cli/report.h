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

#ifndef FERMKO_CLI_REPORT_H_
#define FERMKO_CLI_REPORT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermko/cli/run_config.h"

namespace fermko::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResultRecord {
  std::string chemical;
  std::string kinetics;  // empty for fba and optknock
  std::string method;
  std::vector<std::string> knockouts;
  std::optional<double> sty;
  std::optional<double> c_P;
  std::optional<double> c_S;
  std::optional<double> c_bio;
  std::optional<double> v_bio;
  std::optional<double> v_S;
  std::optional<double> v_P;
  std::optional<double> molar_yield;  // only when v_S > 0
  std::string status;
  int max_knockouts = 0;
  // Set only for aerobic=both runs.
  std::optional<bool> aerobic;
  std::optional<bool> best;
};

inline const char* kCsvHeader =
    "chemical,kinetics,method,knockouts,STY,c_P,c_S,c_bio,v_bio,v_S,v_P,molar_yield,status";

// Six significant digits; knockout ids joined by ';'. Records from
// aerobic=both runs add trailing aerobic and best columns.
std::string format_csv(const std::vector<ResultRecord>& records);
// Aligned text, two decimals.
std::string format_table(const std::vector<ResultRecord>& records);
// x,series,value triples: STY and v_bio against K per chemical and method.
std::string format_plot_data(const std::vector<ResultRecord>& records);

// Throws std::invalid_argument on an empty record list.
std::string emit_report(const std::vector<ResultRecord>& records, ReportFormat format);
// Throws IoError.
void write_text(const std::string& path, const std::string& text);

}  // namespace fermko::cli

#endif  // FERMKO_CLI_REPORT_H_
