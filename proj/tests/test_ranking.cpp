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

#include <algorithm>
#include <string>

#include "qfm/harness/criteria_checks.hpp"
#include "qfm/harness/generators.hpp"
#include "qfm/qfm.hpp"

namespace {

using namespace qfm;

CriteriaMatrix matrix_of(const BaseSet& b, std::vector<std::pair<std::string, std::vector<double>>> rows,
                         std::optional<std::vector<double>> w = std::nullopt) {
  CriteriaMatrix m{b, {}, {}, std::nullopt};
  for (auto& [id, mu] : rows) {
    m.object_ids.push_back(id);
    m.fulfillments.emplace_back(b, mu);
  }
  if (w) m.weights = FuzzySet(b, *w);
  return m;
}

std::vector<std::string> ids(const RankingResult& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) out.push_back(e.id);
  return out;
}

TEST(Ranking, IdenticalObjectsKeepDeclarationOrder) {
  const auto b = BaseSet::indexed(3, "c");
  const auto m = matrix_of(b, {{"z", {.2, .7, .4}}, {"a", {.2, .7, .4}}, {"m", {.2, .7, .4}}});
  for (auto k : kAllModels) {
    const auto r = rank(m, QfmModel{k}, make_identity(b));
    EXPECT_EQ(ids(r), (std::vector<std::string>{"z", "a", "m"})) << to_string(k);
    EXPECT_EQ(r.entries[0].score, r.entries[2].score);
  }
}

TEST(Ranking, DominatingObjectRanksStrictlyHigherUnderFi) {
  const auto b = BaseSet::indexed(4, "c");
  const auto q = harness::make_q_h(FuzzyNumberSpec::identity(), 2, b);
  const auto m = matrix_of(b, {{"A", {1, 1, 0, 0}}, {"B", {1, 1, .5, 0}}}, std::vector<double>{1, 1, .5, .5});
  const auto r = rank(m, QfmModel{ModelKind::FI}, q);
  ASSERT_EQ(ids(r), (std::vector<std::string>{"B", "A"}));
  EXPECT_GT(r.entries[0].score, r.entries[1].score + 1e-12);
}

TEST(Ranking, CutModelCannotSeparateSpreadFromConcentrated) {
  const auto b = BaseSet::indexed(4, "c");
  const auto m = matrix_of(b, {{"A", {1, 1, 0, 0}}, {"B", {.5, .5, .5, .5}}});
  const auto r = rank(m, QfmModel{ModelKind::M}, make_identity(b));
  EXPECT_EQ(ids(r), (std::vector<std::string>{"A", "B"}));
  EXPECT_NEAR(r.entries[0].score, 0.5, 1e-12);
  EXPECT_NEAR(r.entries[1].score, 0.5, 1e-12);
  EXPECT_EQ(r.model.kind, ModelKind::M);
}

TEST(Ranking, OutputIsSortedPermutationOfScores) {
  harness::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto b = BaseSet::indexed(rng.between(1, 6), "c");
    CriteriaMatrix m{b, {}, {}, harness::random_fuzzy_set(rng, b)};
    const std::size_t n = rng.between(1, 8);
    for (std::size_t i = 0; i < n; ++i) {
      m.object_ids.push_back("o" + std::to_string(i));
      m.fulfillments.push_back(harness::random_fuzzy_set(rng, b));
    }
    const auto q = harness::random_quantifier(rng, b, 2);
    for (auto k : kAllModels) {
      const auto r = rank(m, QfmModel{k}, q);
      ASSERT_EQ(r.entries.size(), n);
      auto got = ids(r);
      std::sort(got.begin(), got.end());
      auto want = m.object_ids;
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
      for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_GE(r.entries[i].score, r.entries[i + 1].score);
      for (const auto& e : r.entries) {
        const auto pos = std::find(m.object_ids.begin(), m.object_ids.end(), e.id) - m.object_ids.begin();
        EXPECT_EQ(e.score, evaluate(k, q, {*m.weights, m.fulfillments[pos]}));
      }
    }
  }
}

TEST(Ranking, RejectsMismatchedShapes) {
  const auto b = BaseSet::indexed(3, "c");
  const auto unweighted = matrix_of(b, {{"A", {1, 0, 0}}});
  const auto weighted = matrix_of(b, {{"A", {1, 0, 0}}}, std::vector<double>{1, 1, 1});
  const QfmModel model{ModelKind::M};
  EXPECT_THROW(rank(unweighted, model, make_all_binary(b)), ArgumentError);
  EXPECT_THROW(rank(weighted, model, make_exists(b)), ArgumentError);
  EXPECT_THROW(rank(matrix_of(b, {{"A", {1, 0, 0}}, {"A", {0, 0, 0}}}), model, make_exists(b)), ArgumentError);
  const auto other = BaseSet::indexed(3, "d");
  EXPECT_THROW(rank(unweighted, model, make_exists(other)), ArgumentError);
  EXPECT_NO_THROW(rank(weighted, model, make_all_binary(b)));
}

}  // namespace
