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

#include <string>

#include "fermko/model/metabolic_model.h"
#include "fermko/model/model_io.h"
#include "fermko/model/split.h"
#include "support/fixtures.h"

namespace fermko::model {
namespace {

const char* kTiny = R"({
  "format_version": 1,
  "name": "tiny",
  "metabolites": [{"id": "A"}, {"id": "B"}],
  "reactions": [
    {"id": "EX_A", "stoichiometry": {"A": 1}, "ub": 10, "role": "substrate_uptake"},
    {"id": "R1", "stoichiometry": {"A": -1, "B": 1}, "lb": -5, "ub": 7},
    {"id": "BIO", "stoichiometry": {"B": -1}, "role": "biomass"}
  ]
})";

TEST(ModelIoTest, IllustrativeNetworkHasExpectedMetabolitesAndRoles) {
  const MetabolicModel& m = testing::toy_model();
  for (const char* id : {"A", "B", "C", "D", "E", "F", "G"}) EXPECT_GE(m.metabolite_index(id), 0) << id;
  EXPECT_EQ(m.reactions.size(), 13u);
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kBiomass)].id, "BIO");
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kProduct)].id, "EX_P");
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kSubstrateUptake)].id, "EX_S");
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kOxygenExchange)].id, "EX_O");
}

TEST(ModelIoTest, CoreFixtureCounts) {
  const MetabolicModel& m = testing::core_model();
  EXPECT_EQ(m.reactions.size(), 95u);
  EXPECT_EQ(m.metabolites.size(), 72u);
  EXPECT_TRUE(validate_model(m).empty());
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kBiomass)].id, "Biomass_Ecoli_core");
}

TEST(ModelIoTest, EmptyReactionListReportsMissingBiomass) {
  try {
    parse_model(R"({"metabolites": [], "reactions": []})", ModelFormat::kNativeJson);
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("missing biomass role", 0), 0u) << e.what();
  }
}

TEST(ModelIoTest, MalformedInputIsParseError) {
  EXPECT_THROW(parse_model("{not json", ModelFormat::kNativeJson), ParseError);
  EXPECT_THROW(parse_model("[]", ModelFormat::kCobraJson), ParseError);
  EXPECT_THROW(parse_model(R"({"format_version": 99, "reactions": []})", ModelFormat::kNativeJson), ParseError);
  EXPECT_THROW(load_model("/nonexistent/model.json", ModelFormat::kNativeJson), ParseError);
}

TEST(ModelIoTest, RoleOverrideMovesRole) {
  const MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson, {{ReactionRole::kProduct, "R1"}});
  EXPECT_EQ(m.reactions[m.role_reaction(ReactionRole::kProduct)].id, "R1");
  EXPECT_THROW(parse_model(kTiny, ModelFormat::kNativeJson, {{ReactionRole::kProduct, "nope"}}), ModelError);
}

TEST(ModelIoTest, NativeRoundTripPreservesModel) {
  const MetabolicModel& m = testing::toy_model();
  const MetabolicModel again = parse_model(to_native_json(m), ModelFormat::kNativeJson);
  ASSERT_EQ(again.reactions.size(), m.reactions.size());
  for (std::size_t i = 0; i < m.reactions.size(); ++i) {
    EXPECT_EQ(again.reactions[i].id, m.reactions[i].id);
    EXPECT_EQ(again.reactions[i].stoichiometry, m.reactions[i].stoichiometry);
    EXPECT_EQ(again.reactions[i].lower_bound, m.reactions[i].lower_bound);
    EXPECT_EQ(again.reactions[i].upper_bound, m.reactions[i].upper_bound);
    EXPECT_EQ(again.reactions[i].role, m.reactions[i].role);
  }
}

TEST(ModelIoTest, FormatNames) {
  EXPECT_EQ(parse_model_format("cobra-json"), ModelFormat::kCobraJson);
  EXPECT_EQ(parse_model_format("native-json"), ModelFormat::kNativeJson);
  EXPECT_THROW(parse_model_format("sbml"), std::invalid_argument);
}

TEST(ValidateModelTest, ReportsBoundOrderWithReactionId) {
  MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson);
  m.reactions[1].lower_bound = 9;
  const auto d = validate_model(m);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].invariant, "bound_order");
  EXPECT_EQ(d[0].entity, "R1");
}

TEST(ValidateModelTest, ReportsUnknownMetabolite) {
  MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson);
  m.reactions[1].stoichiometry["Z"] = 1.0;
  const auto d = validate_model(m);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].invariant, "metabolite_reference");
}

TEST(ValidateModelTest, ReportsDuplicateIdsAndRoles) {
  MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson);
  m.reactions[1].id = "EX_A";
  m.reactions[1].role = ReactionRole::kBiomass;
  m.reindex();
  const auto d = validate_model(m);
  bool dup = false, role = false;
  for (const auto& x : d) {
    dup |= x.invariant == "unique_reaction_id";
    role |= x.invariant == "unique_role";
  }
  EXPECT_TRUE(dup);
  EXPECT_TRUE(role);
}

TEST(SplitTest, ReversibleReactionGetsTwoColumnsWithSharedParent) {
  const MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson);
  const auto [net, map] = split_reversible(m);
  ASSERT_EQ(net.n, 4);
  const auto cols = map.columns_of(1);
  ASSERT_EQ(cols.size(), 2u);
  EXPECT_EQ(net.lower[cols[0]], 0.0);
  EXPECT_EQ(net.upper[cols[0]], 7.0);
  EXPECT_EQ(net.lower[cols[1]], 0.0);
  EXPECT_EQ(net.upper[cols[1]], 5.0);
  EXPECT_EQ(map.parent[cols[0]], 1);
  EXPECT_EQ(map.parent[cols[1]], 1);
  EXPECT_TRUE(net.reversed[cols[1]]);
  EXPECT_EQ(net.column_ids[cols[1]], "R1_b");
  // Backward column carries the negated stoichiometry.
  EXPECT_EQ(net.S.coeff(m.metabolite_index("A"), cols[1]), 1.0);
  EXPECT_EQ(net.S.coeff(m.metabolite_index("B"), cols[1]), -1.0);
}

TEST(SplitTest, IrreversibleReactionsMapToIdentity) {
  const MetabolicModel& m = testing::toy_model();
  const auto [net, map] = split_reversible(m);
  EXPECT_EQ(net.n, map.r);
  for (int j = 0; j < net.n; ++j) EXPECT_EQ(map.parent[j], j);
}

TEST(SplitTest, KnockoutVectorMapsToBothDirections) {
  const MetabolicModel m = parse_model(kTiny, ModelFormat::kNativeJson);
  const auto [net, map] = split_reversible(m);
  const std::vector<double> by = map.apply({1.0, 0.0, 1.0});
  for (int j : map.columns_of(1)) EXPECT_EQ(by[j], 0.0);
  for (int j : map.columns_of(0)) EXPECT_EQ(by[j], 1.0);
}

TEST(SplitTest, RoleColumnsFollowPhysicalDirection) {
  const auto [net, map] = split_reversible(testing::core_model());
  const int glc = net.role_column(ReactionRole::kSubstrateUptake);
  ASSERT_GE(glc, 0);
  // COBRA exchanges are written A <=> ; uptake is the backward column.
  EXPECT_TRUE(net.reversed[glc]);
  const int etoh = net.role_column(ReactionRole::kProduct);
  ASSERT_GE(etoh, 0);
  EXPECT_FALSE(net.reversed[etoh]);
}

}  // namespace
}  // namespace fermko::model
