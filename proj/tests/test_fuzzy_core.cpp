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

#include <random>

#include "qfm/fuzzy_core.hpp"

namespace {

using namespace qfm;

const BaseSet kAbc{"a", "b", "c"};
const FuzzySet kX(kAbc, {0.9, 0.5, 0.2});

TEST(BaseSet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(BaseSet(std::vector<std::string>{}), ArgumentError);
  EXPECT_THROW(BaseSet({"a", "a"}), ArgumentError);
  EXPECT_EQ(BaseSet::indexed(3).element(2), "e3");
  EXPECT_EQ(kAbc.require_index("c"), 2u);
  EXPECT_THROW(kAbc.require_index("z"), ArgumentError);
}

TEST(FuzzySet, ValidatesMemberships) {
  EXPECT_THROW(FuzzySet(kAbc, {0.1, 0.2}), ArgumentError);
  EXPECT_THROW(FuzzySet(kAbc, {0.1, 1.2, 0.0}), ArgumentError);
  EXPECT_THROW(FuzzySet(kAbc, {0.1, -0.1, 0.0}), ArgumentError);
  EXPECT_DOUBLE_EQ(kX.membership("b"), 0.5);
  EXPECT_NEAR(kX.mean(), 1.6 / 3.0, 1e-15);
}

TEST(FuzzySet, BaseMismatchIsAnError) {
  const FuzzySet y(BaseSet{"a", "b", "d"}, {0.1, 0.2, 0.3});
  EXPECT_THROW(fuzzy_union(kX, y, standard_logic()), ArgumentError);
  EXPECT_THROW(fuzzier_or_equal(kX, y), ArgumentError);
}

TEST(AlphaCut, Examples) {
  EXPECT_EQ(alpha_cut(kX, 0.5).members(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(alpha_cut(kX, 0.0).size(), 3u);
  const FuzzySet crisp(kAbc, {1, 0, 1});
  EXPECT_EQ(alpha_cut(crisp, 1.0).members(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(strict_alpha_cut(kX, 0.5).members(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(strict_alpha_cut(kX, 1.0).size(), 0u);
  EXPECT_EQ(strict_alpha_cut(FuzzySet(BaseSet{"a"}, {1.0}), 0.999).size(), 1u);
}

TEST(ThreeValuedCut, Examples) {
  auto c0 = three_valued_cut(kX, 0.0);
  EXPECT_EQ(c0.min.members(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(c0.max.members(), (std::vector<std::string>{"a", "b"}));
  auto c1 = three_valued_cut(kX, 1.0);
  EXPECT_EQ(c1.min.size(), 0u);
  EXPECT_EQ(c1.max.size(), 3u);
  const FuzzySet crisp(kAbc, {1, 0, 1});
  for (double g : {0.0, 0.3, 0.7, 1.0}) {
    auto c = three_valued_cut(crisp, g);
    EXPECT_EQ(c.min, c.max);
    EXPECT_EQ(c.min.members(), (std::vector<std::string>{"a", "c"}));
  }
  EXPECT_THROW(three_valued_cut(kX, 1.5), ArgumentError);
}

TEST(Cuts, NestingProperties) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> mu(6);
    for (auto& v : mu) v = u(rng);
    const FuzzySet x(BaseSet::indexed(6), mu);
    double g1 = u(rng), g2 = u(rng);
    if (g1 > g2) std::swap(g1, g2);
    if (t % 10 == 0) g1 = 0.0;
    const auto c1 = three_valued_cut(x, g1), c2 = three_valued_cut(x, g2);
    EXPECT_TRUE(c2.min.is_subset_of(c1.min));
    EXPECT_TRUE(c1.max.is_subset_of(c2.max));
    EXPECT_TRUE(c1.min.is_subset_of(c1.max));
    EXPECT_TRUE(alpha_cut(x, g2).is_subset_of(alpha_cut(x, g1)));
    EXPECT_TRUE(strict_alpha_cut(x, g1).is_subset_of(alpha_cut(x, g1)));
  }
}

TEST(FuzzyMedian, ExamplesAndLaws) {
  EXPECT_DOUBLE_EQ(fuzzy_median(0.8, 0.6), 0.6);
  EXPECT_DOUBLE_EQ(fuzzy_median(0.3, 0.1), 0.3);
  EXPECT_DOUBLE_EQ(fuzzy_median(0.8, 0.2), 0.5);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const double x = u(rng), y = u(rng);
    EXPECT_EQ(fuzzy_median(x, y), fuzzy_median(y, x));
    EXPECT_EQ(fuzzy_median(x, x), x);
    EXPECT_EQ(fuzzy_median(x, 1.0 - x), 0.5);
  }
}

TEST(FuzzierOrEqual, Examples) {
  const BaseSet a{"a"};
  EXPECT_TRUE(fuzzier_or_equal(FuzzySet(a, {0.5}), FuzzySet(a, {0.9})));
  EXPECT_FALSE(fuzzier_or_equal(FuzzySet(a, {0.6}), FuzzySet(a, {0.4})));
  EXPECT_TRUE(fuzzier_or_equal(kX, kX));
}

TEST(FuzzierOrEqual, IsAPartialOrder) {
  std::mt19937_64 rng(11);
  // Coarse grid so that comparable triples actually occur.
  std::uniform_int_distribution<int> k(0, 8);
  auto draw = [&] { return k(rng) / 8.0; };
  int transitive_cases = 0;
  for (int t = 0; t < 20000; ++t) {
    const double x = draw(), y = draw(), z = draw();
    EXPECT_TRUE(fuzzier_or_equal(x, x));
    if (fuzzier_or_equal(x, y) && fuzzier_or_equal(y, x)) {
      EXPECT_EQ(x, y);
    }
    if (fuzzier_or_equal(x, y) && fuzzier_or_equal(y, z)) {
      ++transitive_cases;
      EXPECT_TRUE(fuzzier_or_equal(x, z)) << x << " " << y << " " << z;
    }
  }
  EXPECT_GT(transitive_cases, 100);
}

TEST(InducedLogic, Examples) {
  EXPECT_DOUBLE_EQ(probabilistic_logic().disjunction(0.5, 0.5), 0.75);
  EXPECT_DOUBLE_EQ(standard_logic().conjunction(0.3, 0.7), 0.3);
  EXPECT_DOUBLE_EQ(standard_logic().negation(0.2), 0.8);
  EXPECT_DOUBLE_EQ(probabilistic_logic().negation(0.2), 0.8);
  EXPECT_DOUBLE_EQ(probabilistic_logic().conjunction(0.5, 0.4), 0.2);
  EXPECT_DOUBLE_EQ(standard_logic().implication(0.7, 0.2), 0.3);
}

TEST(SetOperations, Pointwise) {
  const FuzzySet y(kAbc, {0.1, 0.6, 0.4});
  EXPECT_EQ(fuzzy_union(kX, y, standard_logic()), FuzzySet(kAbc, {0.9, 0.6, 0.4}));
  EXPECT_EQ(fuzzy_intersection(kX, y, standard_logic()), FuzzySet(kAbc, {0.1, 0.5, 0.2}));
  const auto c = complement(kX);
  EXPECT_NEAR(c[0], 0.1, 1e-15);
  EXPECT_NEAR(c[2], 0.8, 1e-15);
  const auto p = fuzzy_intersection(kX, y, probabilistic_logic());
  EXPECT_NEAR(p[1], 0.3, 1e-15);
}

}  // namespace
