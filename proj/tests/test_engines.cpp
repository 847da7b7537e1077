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

#include <cmath>

#include "oracles.hpp"
#include "qfm/harness/generators.hpp"
#include "qfm/qfm.hpp"

namespace {

using namespace qfm;
using harness::Rng;

std::vector<FuzzySet> random_args(Rng& rng, const BaseSet& b, std::size_t n) {
  std::vector<FuzzySet> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(harness::random_fuzzy_set(rng, b));
  return out;
}

double eval(ModelKind k, const SemiFuzzyQuantifier& q, const std::vector<FuzzySet>& args,
            const EngineLimits& limits = {}) {
  return evaluate(QfmModel{k}, q, std::span<const FuzzySet>(args), limits);
}

const BaseSet kB4 = BaseSet::indexed(4);

TEST(Engines, IdentityBlock) {
  const auto id = make_identity(kB4);
  const std::vector<std::vector<double>> inputs{{1, 1, 0, 0}, {.5, .5, .5, .5}, {1, 1, .5, .5}, {.5, .5, 0, 0}};
  for (const auto& mu : inputs) {
    const FuzzySet x(kB4, mu);
    EXPECT_NEAR(eval_m(id, {x}), 0.5, 1e-9);
    EXPECT_NEAR(eval_mcx(id, {x}), 0.5, 1e-9);
    for (auto k : {ModelKind::FMD, ModelKind::FI, ModelKind::FA, ModelKind::FOWA}) {
      EXPECT_NEAR(evaluate(k, id, {x}), x.mean(), 1e-9) << to_string(k);
    }
  }
}

TEST(Engines, WeightedIdentityExamples) {
  const auto qid = make_from_fuzzy_number(FuzzyNumberSpec::identity(), 2, kB4);
  const FuzzySet w(kB4, {1, 1, .5, .5});
  const auto wx = [&](std::vector<double> mu) { return fuzzy_intersection(w, FuzzySet(kB4, mu), standard_logic()); };
  EXPECT_NEAR(eval_fowa(qid, {w, wx({1, 1, 0, 0})}), 0.75, 1e-9);
  EXPECT_NEAR(eval_fowa(qid, {w, wx({1, 1, .5, .5})}), 0.75, 1e-9);
  EXPECT_NEAR(eval_fmd(qid, {w, wx({1, 1, 1, 1})}), 1.0, 1e-9);
  EXPECT_NEAR(eval_fmd(qid, {w, wx({1, 1, .5, .5})}), 1.0, 1e-9);
}

TEST(Engines, ExistsExamples) {
  const BaseSet b2{"a", "b"};
  EXPECT_NEAR(eval_fa(make_exists(b2), {FuzzySet(b2, {.5, .5})}), 0.75, 1e-12);
  const auto b = BaseSet::indexed(100);
  const FuzzySet x(b, std::vector<double>(100, 0.01));
  EXPECT_NEAR(eval_fa(make_exists(b), {x}), 1.0 - std::pow(0.99, 100), 1e-9);
  for (auto k : {ModelKind::FMD, ModelKind::FI, ModelKind::M, ModelKind::MCX, ModelKind::FOWA}) {
    EXPECT_NEAR(evaluate(k, make_exists(b), {x}), 0.01, 1e-12) << to_string(k);
  }
}

TEST(Engines, GammaProfileOfExistsAtHalf) {
  const BaseSet b{"e"};
  const FuzzySet x(b, {0.5});
  const std::vector<FuzzySet> args{x};
  const auto p = gamma_profile(make_exists(b), args);
  ASSERT_FALSE(p.intervals.empty());
  for (const auto& iv : p.intervals) {
    EXPECT_EQ(iv.top, 1.0);
    EXPECT_EQ(iv.bottom, 0.0);
  }
  for (double g : {0.0, 0.4, 1.0}) {
    const auto r = top_bottom_at(make_exists(b), args, g);
    EXPECT_EQ(r.sup, 1.0);
    EXPECT_EQ(r.inf, 0.0);
  }
}

TEST(Engines, CrispProfileIsFlat) {
  const auto q = make_from_fuzzy_number(FuzzyNumberSpec::s_shape(0.2, 0.7), 1, kB4);
  const std::vector<FuzzySet> args{FuzzySet(kB4, {1, 0, 1, 1})};
  const double v = q({CrispSet(kB4, {"e1", "e3", "e4"})});
  for (const auto& iv : gamma_profile(q, args).intervals) {
    EXPECT_EQ(iv.top, v);
    EXPECT_EQ(iv.bottom, v);
  }
}

// Every engine reproduces Q on every crisp tuple.
TEST(Engines, CorrectGeneralizationExhaustive) {
  Rng rng(101);
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto b = BaseSet::indexed(m);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        const auto q = harness::random_quantifier(rng, b, n);
        oracle::for_each_tuple(m, n, [&](const std::vector<oracle::Mask>& ys) {
          std::vector<FuzzySet> args;
          for (auto y : ys) {
            std::vector<double> mu(m);
            for (std::size_t e = 0; e < m; ++e) mu[e] = (y >> e & 1) ? 1.0 : 0.0;
            args.emplace_back(b, mu);
          }
          const double want = oracle::q_at(q, ys);
          for (auto k : kAllModels) EXPECT_NEAR(eval(k, q, args), want, 1e-12) << to_string(k);
        });
      }
    }
  }
}

TEST(Engines, SandwichMatchesEnumeration) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = rng.between(1, 6), n = rng.between(1, 2);
    const auto b = BaseSet::indexed(m);
    const auto q = harness::random_quantifier(rng, b, n, false);
    std::vector<Bitset> lo, hi;
    std::vector<oracle::Mask> lm, hm;
    for (std::size_t i = 0; i < n; ++i) {
      const auto h = rng.index(std::size_t{1} << m);
      const auto l = h & rng.index(std::size_t{1} << m);
      lo.push_back(Bitset::from_u64(m, l));
      hi.push_back(Bitset::from_u64(m, h));
      lm.push_back(l);
      hm.push_back(h);
    }
    const auto fast = sandwich_range(q, lo, hi);
    const auto slow = sandwich_range_enumerate(q, lo, hi);
    const auto ref = oracle::sandwich(q, lm, hm);
    EXPECT_EQ(fast.sup, ref.sup);
    EXPECT_EQ(fast.inf, ref.inf);
    EXPECT_EQ(slow.sup, ref.sup);
    EXPECT_EQ(slow.inf, ref.inf);
  }
}

TEST(Engines, FaMatchesSubsetEnumeration) {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 2);
    const std::size_t m = rng.between(1, n == 1 ? 10 : 6);
    const auto b = BaseSet::indexed(m);
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    const double ref = oracle::fa(q, args);
    EXPECT_NEAR(eval_fa(q, args), ref, 1e-9);
    EXPECT_NEAR(eval_fa_enumerate(q, args), ref, 1e-9);
  }
}

TEST(Engines, FaTernaryByEnumeration) {
  Rng rng(29);
  const auto b = BaseSet::indexed(2);
  for (int t = 0; t < 20; ++t) {
    const auto q = harness::random_quantifier(rng, b, 3);
    const auto args = random_args(rng, b, 3);
    EXPECT_NEAR(eval_fa(q, args), oracle::fa(q, args), 1e-12);
  }
}

TEST(Engines, CardinalityDistributions) {
  const BaseSet b{"a", "b", "c"};
  const FuzzySet x(b, {0.2, 0.5, 1.0});
  const auto d = cardinality_distribution(x);
  EXPECT_NEAR(d(0), 0.0, 1e-15);
  EXPECT_NEAR(d(1), 0.8 * 0.5, 1e-15);
  EXPECT_NEAR(d(2), 0.2 * 0.5 + 0.8 * 0.5, 1e-15);
  EXPECT_NEAR(d(3), 0.1, 1e-15);
  EXPECT_NEAR(d.total(), 1.0, 1e-15);
  const auto j = joint_cardinality_distribution(x, FuzzySet(b, {0.5, 0.5, 0.5}));
  EXPECT_NEAR(j.total(), 1.0, 1e-12);
  EXPECT_NEAR(subset_mass(x, CrispSet(b, {"b", "c"})), 0.8 * 0.5, 1e-15);
}

TEST(Engines, AlphaCutEnginesMatchOracles) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 2);
    const std::size_t m = rng.between(1, n == 1 ? 8 : 5);
    const auto b = BaseSet::indexed(m);
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    EXPECT_NEAR(eval_fmd(q, args), oracle::fmd(q, args), 1e-12);
    EXPECT_NEAR(eval_fi(q, args), oracle::fi(q, args), 1e-12);
  }
}

TEST(Engines, CutEnginesMatchOracles) {
  Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 2);
    const std::size_t m = rng.between(1, n == 1 ? 7 : 4);
    const auto b = BaseSet::indexed(m);
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    EXPECT_NEAR(eval_m(q, args), oracle::m(q, args), 1e-12);
    EXPECT_NEAR(eval_fowa(q, args), oracle::fowa(q, args), 1e-12);
  }
}

TEST(Engines, McxMatchesFullPairEnumeration) {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.between(1, 2);
    const std::size_t m = rng.between(1, n == 1 ? 4 : 3);
    const auto b = BaseSet::indexed(m);
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    EXPECT_NEAR(eval_mcx(q, args), oracle::mcx(q, args), 1e-9) << q.description();
  }
}

// A non-quantitative quantifier on which restricting V and W to the
// level cuts of X gives a wrong answer.
TEST(Engines, McxNonQuantitativeRegression) {
  const BaseSet b{"a", "b"};
  // Q(Y) = 1 iff Y = {a}
  const auto q = make_general_table(b, 1, {0, 1, 0, 0});
  const std::vector<FuzzySet> args{FuzzySet(b, {0.3, 0.4})};
  EXPECT_NEAR(oracle::mcx(q, args), 0.3, 1e-15);
  EXPECT_NEAR(eval_mcx(q, args), 0.3, 1e-15);
}

TEST(Engines, FiEqualsFmdOnUnaryInputs) {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto b = BaseSet::indexed(rng.between(1, 30));
    const auto q = harness::random_quantifier(rng, b, 1);
    const auto args = random_args(rng, b, 1);
    EXPECT_NEAR(eval_fi(q, args), eval_fmd(q, args), 1e-12);
  }
}

TEST(Engines, OwaCoincidenceOnIncreasingUnary) {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = rng.between(1, 25);
    const auto b = BaseSet::indexed(m);
    auto table = harness::random_table(rng, m + 1);
    std::sort(table.begin(), table.end());
    const auto q = make_unary_cardinality(b, table);
    const auto args = random_args(rng, b, 1);
    const double fmd = eval_fmd(q, args);
    EXPECT_NEAR(eval_fowa(q, args), fmd, 1e-9);
    EXPECT_NEAR(eval_fi(q, args), fmd, 1e-9);
  }
}

TEST(Engines, MedianBetweenBounds) {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 2);
    const auto b = BaseSet::indexed(rng.between(1, n == 1 ? 12 : 6));
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    const auto p = gamma_profile(q, args);
    double width = 0.0;
    for (const auto& iv : p.intervals) {
      EXPECT_LE(iv.bottom, iv.top);
      const double med = fuzzy_median(iv.top, iv.bottom);
      EXPECT_LE(iv.bottom, med);
      EXPECT_LE(med, iv.top);
      EXPECT_LT(iv.lo, iv.hi);
      width += iv.hi - iv.lo;
    }
    EXPECT_NEAR(width, 1.0, 1e-12);
    const double m = eval_m(q, args), f = eval_fowa(q, args);
    EXPECT_LE(p.integral_bottom() - 1e-12, m);
    EXPECT_LE(m, p.integral_top() + 1e-12);
    EXPECT_LE(p.integral_bottom() - 1e-12, f);
    EXPECT_LE(f, p.integral_top() + 1e-12);
  }
}

TEST(Engines, MonotoneInArguments) {
  Rng rng(59);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = rng.between(1, 8);
    const auto b = BaseSet::indexed(m);
    auto table = harness::random_table(rng, m + 1);
    std::sort(table.begin(), table.end());
    const auto q = make_unary_cardinality(b, table);
    const auto x = harness::random_fuzzy_set(rng, b);
    auto mu = std::vector<double>(x.memberships().begin(), x.memberships().end());
    const std::size_t e = rng.index(m);
    mu[e] = rng.uniform(mu[e], 1.0);
    const std::vector<FuzzySet> lo{x}, hi{FuzzySet(b, mu)};
    for (auto k : kAllModels) EXPECT_LE(eval(k, q, lo), eval(k, q, hi) + 1e-12) << to_string(k);
  }
}

TEST(Engines, MonotoneInQuantifiers) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = rng.between(1, 8);
    const auto b = BaseSet::indexed(m);
    auto t1 = harness::random_table(rng, m + 1);
    auto t2 = t1;
    for (auto& v : t2) v = rng.uniform(v, 1.0);
    const auto args = random_args(rng, b, 1);
    for (auto k : kAllModels) {
      EXPECT_LE(eval(k, make_unary_cardinality(b, t1), args), eval(k, make_unary_cardinality(b, t2), args) + 1e-12)
          << to_string(k);
    }
  }
}

TEST(Engines, ResultsStayInUnitInterval) {
  Rng rng(67);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 2);
    const auto b = BaseSet::indexed(rng.between(1, 10));
    const auto q = harness::random_quantifier(rng, b, n);
    const auto args = random_args(rng, b, n);
    for (auto k : kAllModels) {
      const double v = eval(k, q, args);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(Engines, DuplicatedMembershipsCoalesce) {
  const auto b = BaseSet::indexed(6);
  const FuzzySet x(b, {0.3, 0.3 + 1e-15, 0.3, 0.7, 0.7, 0.7 - 1e-15});
  const auto q = make_identity(b);
  const std::vector<FuzzySet> args{x};
  for (const auto& iv : gamma_profile(q, args).intervals) EXPECT_GT(iv.hi - iv.lo, 1e-12);
  EXPECT_NEAR(eval_fmd(q, args), x.mean(), 1e-12);
}

TEST(Engines, ArgumentValidation) {
  const auto q = make_identity(kB4);
  EXPECT_THROW(eval_fmd(q, {}), ArgumentError);
  EXPECT_THROW(eval_m(q, {FuzzySet(BaseSet::indexed(3), {0, 0, 0})}), ArgumentError);
  EXPECT_THROW(parse_model_kind("XYZ"), ArgumentError);
  EXPECT_EQ(parse_model_kind("MCX"), ModelKind::MCX);
}

TEST(Engines, CapacityLimits) {
  const auto b = BaseSet::indexed(6);
  Rng rng(71);
  const auto args = random_args(rng, b, 2);
  EngineLimits tiny;
  tiny.fi_max_cells = 10;
  EXPECT_THROW(eval_fi(make_some_binary(b), std::span<const FuzzySet>(args), tiny), CapacityError);
  tiny = {};
  tiny.fa_max_binary_size = 3;
  const auto general = make_general_table(b, 2, harness::random_table(rng, std::size_t{1} << 12));
  EXPECT_THROW(eval_fa(general, std::span<const FuzzySet>(args), tiny), CapacityError);
  tiny = {};
  tiny.sandwich_max_evaluations = 4;
  const std::vector<FuzzySet> half{FuzzySet(b, std::vector<double>(6, 0.5)), FuzzySet(b, std::vector<double>(6, 0.5))};
  EXPECT_THROW(eval_m(general, std::span<const FuzzySet>(half), tiny), CapacityError);
}

TEST(Engines, SigmaCount) {
  const BaseSet b{"a", "b"};
  EXPECT_DOUBLE_EQ(zadeh_sigma_count(make_identity(b), FuzzySet(b, {1, 0.5})), 0.75);
  const auto s = make_from_fuzzy_number(FuzzyNumberSpec::s_shape(0.2, 0.7), 1, b);
  EXPECT_DOUBLE_EQ(zadeh_sigma_count(s, FuzzySet(b, {0.3, 0.3})), FuzzyNumberSpec::s_shape(0.2, 0.7)(0.3));
  EXPECT_THROW(zadeh_sigma_count(make_exists(b), FuzzySet(b, {0, 1})), ArgumentError);
}

TEST(Engines, SigmaCountLimitOfFa) {
  Rng rng(73);
  const auto b = BaseSet::indexed(200);
  const auto id = make_identity(b);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> mu(200);
    for (auto& v : mu) v = rng.uniform();
    const FuzzySet x(b, mu);
    EXPECT_LE(std::abs(eval_fa(id, {x}) - zadeh_sigma_count(id, x)), 0.06);
  }
}

TEST(Engines, NullaryQuantifier) {
  const auto closed = crisp_argument_insertion(make_exists(kB4), CrispSet(kB4, {"e2"}));
  for (auto k : kAllModels) EXPECT_EQ(evaluate(QfmModel{k}, closed, std::span<const FuzzySet>{}), 1.0);
}

}  // namespace
