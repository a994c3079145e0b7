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

#include "fermko/cli/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace fermko::cli {
namespace {

std::string fmt(const std::optional<double>& v, const char* spec) {
  if (!v) return "";
  double x = *v;
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  std::string s = buf;
  if (s == "-0" || s == "-0.00") s.erase(0, 1);
  return s;
}

std::string join(const std::vector<std::string>& ids, const char* sep) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : sep) + id;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool has_aeration(const std::vector<ResultRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const ResultRecord& r) { return r.aerobic.has_value(); });
}

std::vector<std::string> cells(const ResultRecord& r, const char* spec, bool aeration) {
  std::vector<std::string> c = {r.chemical, r.kinetics, r.method, join(r.knockouts, ";"),
                                fmt(r.sty, spec), fmt(r.c_P, spec), fmt(r.c_S, spec), fmt(r.c_bio, spec),
                                fmt(r.v_bio, spec), fmt(r.v_S, spec), fmt(r.v_P, spec),
                                fmt(r.molar_yield, spec), r.status};
  if (aeration) {
    c.push_back(r.aerobic ? (*r.aerobic ? "on" : "off") : "");
    c.push_back(r.best.value_or(false) ? "best" : "");
  }
  return c;
}

}  // namespace

std::string format_csv(const std::vector<ResultRecord>& records) {
  const bool aeration = has_aeration(records);
  std::string out = kCsvHeader;
  if (aeration) out += ",aerobic,best";
  out += '\n';
  for (const auto& r : records) {
    const auto c = cells(r, "%.6g", aeration);
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + csv_field(c[i]);
    out += '\n';
  }
  return out;
}

std::string format_table(const std::vector<ResultRecord>& records) {
  const bool aeration = has_aeration(records);
  std::vector<std::string> header = {"chemical", "kinetics", "method", "knockouts", "STY", "c_P", "c_S",
                                     "c_bio", "v_bio", "v_S", "v_P", "yield", "status"};
  if (aeration) {
    header.push_back("aerobic");
    header.push_back("best");
  }
  std::vector<std::vector<std::string>> rows = {header};
  for (const auto& r : records) {
    auto c = cells(r, "%.2f", aeration);
    for (auto& s : c) {
      if (s.empty()) s = "-";
    }
    rows.push_back(std::move(c));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      const std::string& s = rows[k][i];
      const bool numeric = i >= 4 && i <= 11;
      const std::string pad(width[i] - s.size(), ' ');
      line += (i ? "  " : "") + (numeric ? pad + s : s + pad);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
    if (k == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w;
      out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    }
  }
  return out;
}

std::string format_plot_data(const std::vector<ResultRecord>& records) {
  std::string out = "x,series,value\n";
  for (const auto& r : records) {
    std::string series = r.chemical + ":" + r.method;
    if (!r.kinetics.empty()) series += ":" + r.kinetics;
    if (r.aerobic) series += *r.aerobic ? ":aerobic" : ":anaerobic";
    const std::string x = std::to_string(r.max_knockouts);
    if (r.sty) out += x + "," + csv_field(series + ":STY") + "," + fmt(r.sty, "%.6g") + "\n";
    if (r.v_bio) out += x + "," + csv_field(series + ":v_bio") + "," + fmt(r.v_bio, "%.6g") + "\n";
  }
  return out;
}

std::string emit_report(const std::vector<ResultRecord>& records, ReportFormat format) {
  if (records.empty()) throw std::invalid_argument("no records to report");
  switch (format) {
    case ReportFormat::kCsv: return format_csv(records);
    case ReportFormat::kTable: return format_table(records);
    case ReportFormat::kPlotData: return format_plot_data(records);
  }
  return {};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace fermko::cli
