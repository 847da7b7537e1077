// Copyright 2026 The qfm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>

#include "qfm/io/commands.hpp"

namespace {

using namespace qfm;
using namespace qfm::io;

std::string sample(const std::string& name) { return std::string(QFM_SAMPLES_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_problem(text, "t.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

const std::string kHead = R"("schema_version": 1, "elements": ["a", "b"], )";

TEST(Parse, ReportsLocusForBadValues) {
  EXPECT_EQ(error_of("{" + kHead + R"("fuzzy_sets": {"X": [0.2, 1.5]}})"), "t.json:/fuzzy_sets/X/1: membership outside [0,1]");
}

TEST(Parse, ErrorsNameTheOffendingPath) {
  EXPECT_NE(error_of("{" + kHead + R"("fuzzy_sets": {"X": [0.2]}})").find("/fuzzy_sets/X"), std::string::npos);
  EXPECT_NE(error_of("{" + kHead + R"("quantifiers": {"q": {"type": "bogus"}}})").find("/quantifiers/q/type"),
            std::string::npos);
  EXPECT_NE(error_of("{" + kHead + R"("evaluations": [{"quantifier": "nope", "args": []}]})")
                .find("/evaluations/0/quantifier"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema_version": 7, "elements": ["a"]})").find("schema_version"), std::string::npos);
  EXPECT_NE(error_of(R"({"schema_version": 1, "elements": ["a", "a"]})").find("/elements"), std::string::npos);
}

TEST(Parse, SyntaxErrorsCarryLineAndColumn) {
  const auto msg = error_of("{\n  \"schema_version\": 1,\n  \"elements\": [\"a\",]\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Parse, MissingFile) {
  EXPECT_THROW(load_problem(sample("does_not_exist.json")), InputError);
}

TEST(Commands, EvalIdentityBlock) {
  const auto out = cmd_eval(load_problem(sample("identity_block.json")));
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto& rows = out.report["results"];
  ASSERT_EQ(rows.size(), 4u * kAllModels.size());
  const std::map<std::string, double> means{{"x1", 0.5}, {"x2", 0.5}, {"x3", 0.75}, {"x4", 0.25}};
  for (const auto& row : rows) {
    const std::string id = row["evaluation"], model = row["model"];
    const double v = row["value"];
    if (model == "M" || model == "MCX") {
      EXPECT_NEAR(v, 0.5, 1e-12) << id << " " << model;
    } else {
      EXPECT_NEAR(v, means.at(id), 1e-12) << id << " " << model;
    }
  }
  EXPECT_NE(out.text.find("evaluation"), std::string::npos);
  EXPECT_EQ(out.csv.rfind("evaluation,target,args,model,value\r\n", 0), 0u);
}

TEST(Commands, EvalCrispAgreesAcrossModels) {
  const auto out = cmd_eval(load_problem(sample("crisp.json")));
  std::map<std::string, double> first;
  for (const auto& row : out.report["results"]) {
    const std::string id = row["evaluation"];
    const double v = row["value"];
    auto [it, fresh] = first.emplace(id, v);
    if (!fresh) {
      EXPECT_NEAR(v, it->second, 1e-12) << id;
    }
  }
  EXPECT_FALSE(first.empty());
}

TEST(Commands, EvalModelFilter) {
  const auto out = cmd_eval(load_problem(sample("identity_block.json")), {ModelKind::FA});
  ASSERT_EQ(out.report["results"].size(), 4u);
  for (const auto& row : out.report["results"]) EXPECT_EQ(row["model"], "FA");
}

TEST(Commands, SweepMembershipAxis) {
  const auto out = cmd_sweep(load_problem(sample("sweep.json")));
  const auto& cols = out.report["columns"];
  ASSERT_EQ(cols[0], "mu(X,e1)");
  const auto& rows = out.report["rows"];
  ASSERT_EQ(rows.size(), 11u);
  std::size_t fmd = 0, m = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] == "FMD") fmd = c;
    if (cols[c] == "M") m = c;
  }
  ASSERT_GT(fmd, 0u);
  ASSERT_GT(m, 0u);
  for (const auto& row : rows) {
    const double x = row[0];
    EXPECT_NEAR(row[fmd].get<double>(), (x + 1.5) / 4.0, 1e-12);
    EXPECT_NEAR(row[m].get<double>(), 0.5, 1e-12);
  }
}

TEST(Commands, SweepEmptyGridGivesHeaderOnly) {
  auto p = load_problem(sample("sweep.json"));
  p.sweeps[0].grid.clear();
  const auto out = cmd_sweep(p, std::string("mu"), {ModelKind::FMD, ModelKind::M});
  EXPECT_EQ(out.csv, "\"mu(X,e1)\",FMD,M\r\n");
  EXPECT_TRUE(out.report["rows"].empty());
}

TEST(Commands, SweepUnknownIdIsInputError) {
  EXPECT_THROW(cmd_sweep(load_problem(sample("sweep.json")), std::string("nope")), InputError);
}

TEST(Commands, PartitionSweepSumsToOneForProbabilisticModels) {
  const auto out = cmd_sweep(load_problem(sample("partition.json")), std::nullopt,
                             {ModelKind::FMD, ModelKind::FI, ModelKind::FA});
  ASSERT_EQ(out.report["rows"].size(), 5u);
  for (const auto& row : out.report["rows"]) {
    for (std::size_t c = 1; c < row.size(); ++c) EXPECT_NEAR(row[c].get<double>(), 1.0, 1e-9);
  }
}

TEST(Commands, PartitionEvalListsLabelsAndSum) {
  const auto out = cmd_eval(load_problem(sample("partition.json")), {ModelKind::FA});
  const auto& rows = out.report["results"];
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0]["target"], "five.L0");
  EXPECT_EQ(rows[5]["target"], "five.sum");
  EXPECT_NEAR(rows[5]["value"].get<double>(), 1.0, 1e-9);
}

TEST(Commands, RankUsesFileDefaultsAndOverrides) {
  const auto p = load_problem(sample("ranking.json"));
  const auto out = cmd_rank(p);
  const auto& rs = out.report["rankings"];
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0]["entries"][0]["id"], "A");
  EXPECT_NEAR(rs[0]["entries"][0]["score"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(rs[0]["entries"][1]["score"].get<double>(), 0.5, 1e-12);
  const auto& w = rs[1]["entries"];
  EXPECT_EQ(w[0]["id"], "B");
  EXPECT_EQ(w[1]["id"], "A");
  EXPECT_EQ(w[2]["id"], "C");

  const auto fa = cmd_rank(p, ModelKind::FA, std::string("identity"), std::string("unweighted"));
  ASSERT_EQ(fa.report["rankings"].size(), 1u);
  EXPECT_EQ(fa.report["rankings"][0]["model"], "FA");
  EXPECT_THROW(cmd_rank(p, std::nullopt, std::nullopt, std::string("missing")), InputError);
  EXPECT_THROW(cmd_rank(p, std::nullopt, std::string("many_weighted"), std::string("unweighted")), InputError);
}

TEST(Commands, PropertiesFilterReportsCounterexample) {
  harness::CheckOptions opt;
  opt.budget = 50;
  const auto out = cmd_properties(opt, {ModelKind::FOWA}, {harness::PropertyId::C_discriminative_binary});
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto& reps = out.report["reports"];
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0]["verdict"], "counterexample_found");
  EXPECT_EQ(reps[0]["conformance"], "agree");
  EXPECT_FALSE(reps[0]["witness"].is_null());
  EXPECT_EQ(out.report["summary"]["agree"], 1);
}

TEST(Commands, ReportsAreDeterministic) {
  harness::CheckOptions opt;
  opt.budget = 30;
  const auto a = cmd_properties(opt, {ModelKind::FI, ModelKind::M});
  const auto b = cmd_properties(opt, {ModelKind::FI, ModelKind::M});
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.csv, b.csv);
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  CsvDocument doc({"x", "y,z"});
  doc.add({"1", "2"});
  EXPECT_EQ(doc.str(), "x,\"y,z\"\r\n1,2\r\n");
}

TEST(Format, ExactRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 0.0, 1.0, 0.92}) EXPECT_EQ(std::stod(format_exact(v)), v);
  EXPECT_EQ(format_fixed(0.5), "0.500000");
}

}  // namespace
