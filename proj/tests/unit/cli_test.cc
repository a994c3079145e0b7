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

#include <filesystem>
#include <sstream>

#include "fermko/cli/report.h"
#include "fermko/cli/run_config.h"
#include "fermko/cli/runner.h"
#include "support/fixtures.h"

namespace fermko::cli {
namespace {

RunConfig toy_config() {
  RunConfig c = load_config(testing::data_path("configs/toy_mm.json"));
  return c;
}

TEST(RunConfigTest, LoadsFileAndResolvesModelPath) {
  const RunConfig c = toy_config();
  EXPECT_TRUE(std::filesystem::exists(c.model_path)) << c.model_path;
  EXPECT_EQ(c.command, Command::kSimulKnock);
  EXPECT_EQ(c.kinetics, kinetics::KineticsKind::kMichaelisMenten);
  EXPECT_EQ(c.max_knockouts, 1);
  EXPECT_EQ(c.target, "EX_P");
  EXPECT_EQ(c.params.K_S_MM, 0.53);
  EXPECT_EQ(c.params.v_S_max, 10.0);
  EXPECT_FALSE(c.params.K_S.has_value());
  EXPECT_NO_THROW(c.validate());
}

TEST(RunConfigTest, RejectsBadInput) {
  EXPECT_THROW(parse_config(R"({"model": "x.json", "colour": 1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"model": "x.json", "kinetics": "hill"})"), ConfigError);
  EXPECT_THROW(parse_config("{not json"), ConfigError);
  EXPECT_THROW(parse_config(R"({"model": "x.json", "parameters": {"v_S_max": "ten"}})"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), std::exception);

  RunConfig c = toy_config();
  c.max_knockouts = -1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = toy_config();
  c.target.clear();
  EXPECT_THROW(c.validate(), ConfigError);
  c = toy_config();
  c.params.f = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(RunConfigTest, EnumParsing) {
  EXPECT_EQ(parse_command("optknock"), Command::kOptKnock);
  EXPECT_EQ(parse_aeration("both"), Aeration::kBoth);
  EXPECT_EQ(parse_report_format("plot-data"), ReportFormat::kPlotData);
  EXPECT_EQ(parse_report_format("pretty-table"), ReportFormat::kTable);
  EXPECT_EQ(to_string(Command::kSequential), "sequential");
  EXPECT_THROW(parse_command("optimize"), ConfigError);
  EXPECT_THROW(parse_aeration("maybe"), ConfigError);
}

TEST(ParameterOverridesTest, SetAndMerge) {
  ParameterOverrides a;
  a.set("v_S_max=12.5");
  a.set("K_S", 0.1);
  EXPECT_EQ(a.v_S_max, 12.5);
  EXPECT_THROW(a.set("v_S_max"), ConfigError);
  EXPECT_THROW(a.set("speed=3"), ConfigError);
  EXPECT_THROW(a.set("K_S=abc"), ConfigError);
  ParameterOverrides b;
  b.set("K_S=0.2");
  b.set("M_P=0.046");
  a.merge(b);
  EXPECT_EQ(a.K_S, 0.2);
  EXPECT_EQ(a.v_S_max, 12.5);
  EXPECT_EQ(a.M_P, 0.046);
}

ResultRecord sample_record() {
  ResultRecord r;
  r.chemical = "P";
  r.kinetics = "mm";
  r.method = "simulknock";
  r.knockouts = {"B-C", "F-C"};
  r.sty = 31.332857947;
  r.c_P = 6.4168544;
  r.c_S = 1.1087359;
  r.c_bio = 6.4168544;
  r.v_bio = 4.8828999;
  r.v_S = 6.7657998;
  r.v_P = 4.8828999;
  r.molar_yield = 4.8828999 / 6.7657998;
  r.status = "optimal";
  r.max_knockouts = 2;
  return r;
}

TEST(ReportTest, CsvHeaderAndSignificantDigits) {
  const std::string csv = format_csv({sample_record()});
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_EQ(row.rfind("P,mm,simulknock,B-C;F-C,31.3329,6.41685,1.10874,", 0), 0u) << row;
  EXPECT_NE(row.find(",optimal"), std::string::npos);
}

TEST(ReportTest, EmptyFieldsAndAerationColumns) {
  ResultRecord r;
  r.chemical = "P";
  r.method = "fba";
  r.v_bio = 13.0;
  r.status = "optimal";
  const std::string csv = format_csv({r});
  EXPECT_NE(csv.find("P,,fba,,,,,,13,,,,optimal"), std::string::npos) << csv;
  r.aerobic = true;
  r.best = true;
  const std::string both = format_csv({r});
  EXPECT_EQ(both.rfind(std::string(kCsvHeader) + ",aerobic,best", 0), 0u) << both;
}

TEST(ReportTest, TableAndPlotData) {
  const std::string table = format_table({sample_record()});
  EXPECT_NE(table.find("31.33"), std::string::npos);
  EXPECT_NE(table.find("B-C;F-C"), std::string::npos);
  const std::string plot = format_plot_data({sample_record()});
  EXPECT_EQ(plot.rfind("x,series,value\n", 0), 0u);
  EXPECT_NE(plot.find("2,P:simulknock:mm:STY,31.3329"), std::string::npos) << plot;
  EXPECT_NE(plot.find(":v_bio,"), std::string::npos);
  EXPECT_THROW(emit_report({}, ReportFormat::kCsv), std::invalid_argument);
}

TEST(RunnerTest, EveryCommandOnIllustrativeNetwork) {
  RunConfig c = toy_config();
  c.command = Command::kFba;
  RunOutcome o = run(c);
  ASSERT_EQ(o.records.size(), 1u);
  EXPECT_NEAR(*o.records[0].v_bio, 13.0, 1e-9);
  EXPECT_TRUE(o.records[0].kinetics.empty());

  c.command = Command::kOptKnock;
  o = run(c);
  EXPECT_EQ(o.records[0].knockouts, (std::vector<std::string>{"B-C"}));

  c.command = Command::kSequential;
  o = run(c);
  EXPECT_NEAR(*o.records[0].sty, 21.0, 21.0 * 0.005);

  c.command = Command::kSimulKnock;
  o = run(c);
  EXPECT_EQ(o.exit_code, kExitOptimal);
  EXPECT_EQ(o.records[0].knockouts, (std::vector<std::string>{"F-C"}));
  EXPECT_NEAR(*o.records[0].sty, 29.3, 29.3 * 0.005);
  EXPECT_EQ(o.records[0].kinetics, "mm");
}

TEST(RunnerTest, BothAerationsMarkOneBest) {
  RunConfig c = toy_config();
  c.aerobic = Aeration::kBoth;
  const RunOutcome o = run(c);
  ASSERT_EQ(o.records.size(), 2u);
  EXPECT_TRUE(*o.records[0].aerobic);
  EXPECT_FALSE(*o.records[1].aerobic);
  EXPECT_NE(*o.records[0].best, *o.records[1].best);
}

TEST(RunnerTest, ExitCodes) {
  std::ostringstream out, err;
  RunConfig c = toy_config();
  c.params.v_bio_max = 1.0;
  c.kinetics = kinetics::KineticsKind::kMonod;
  c.params.K_S = 0.044;
  EXPECT_EQ(run_and_report(c, out, err), kExitInfeasible);
  EXPECT_NE(out.str().find("infeasible"), std::string::npos);

  out.str("");
  c = toy_config();
  c.model_path = "/nonexistent/model.json";
  EXPECT_EQ(run_and_report(c, out, err), kExitIo);
  EXPECT_TRUE(out.str().empty());

  c = toy_config();
  c.target = "NOPE";
  EXPECT_EQ(run_and_report(c, out, err), kExitConfig);
  EXPECT_TRUE(out.str().empty());
  EXPECT_FALSE(err.str().empty());
}

TEST(RunnerTest, MaintenanceFloorDefaultsAndOverrides) {
  RunConfig c = load_config(testing::data_path("configs/core_ethanol.json"));
  c.params.atpm_floor.reset();
  simulknock::SimulKnockProblem p = build_problem(c, true);
  EXPECT_EQ(p.context->net().lower[p.context->atpm_col()], 6.86);
  c.params.atpm_floor = 3.0;
  p = build_problem(c, true);
  EXPECT_EQ(p.context->net().lower[p.context->atpm_col()], 3.0);
}

TEST(RunnerTest, ExportWritesSingleLevelProgram) {
  RunConfig c = toy_config();
  const auto path = std::filesystem::temp_directory_path() / "fermko_cli_test_export.lp";
  c.export_lp = path.string();
  std::ostringstream out, err;
  ASSERT_EQ(run_and_report(c, out, err), kExitOptimal) << err.str();
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_GT(std::filesystem::file_size(path), 0u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fermko::cli
