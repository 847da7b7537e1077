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

// Checks for the behavioural criteria: aggregation, identity averaging,
// quantified partitions and discriminative power.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qfm/evaluate.hpp"
#include "qfm/harness/framework_checks.hpp"
#include "qfm/harness/generators.hpp"
#include "qfm/harness/properties.hpp"
#include "qfm/harness/search.hpp"
#include "qfm/ruspini.hpp"

namespace qfm::harness {

// F(exists) on {c/e1, ..., c/em}. Aggregative when some instance exceeds the
// largest membership by more than 0.1; non-aggregative models must return
// the sup exactly and F^A the probabilistic sum.
inline PropertyReport check_aggregative(QfmModel model, const CheckOptions& opt = {}) {
  Search s(PropertyId::C_aggregative, model, opt);
  const std::vector<std::pair<double, std::size_t>> instances{{0.5, 2}, {0.01, 10}, {0.1, 10}, {0.1, 100}, {0.01, 100}};
  bool aggregative = false;
  auto f = s.engine();
  for (const auto& [c, m] : instances) {
    const auto b = BaseSet::indexed(m, "e");
    const std::vector<FuzzySet> args{FuzzySet(b, std::vector<double>(m, c))};
    const auto q = make_exists(b);
    const double v = f(q, args);
    ++s.report().trials;
    const double closed = model.kind == ModelKind::FA ? 1.0 - std::pow(1.0 - c, static_cast<double>(m)) : c;
    if (std::abs(v - closed) > opt.tol) {
      s.report().anomalies.push_back("F(exists) on " + std::to_string(m) + " x " + std::to_string(c) + " gave " +
                                     std::to_string(v) + ", closed form " + std::to_string(closed));
    }
    s.report().max_deviation = std::max(s.report().max_deviation, std::abs(v - closed));
    if (v > c + 0.1) aggregative = true;
  }
  PropertyReport r = s.report();
  if (aggregative) {
    r.verdict = Verdict::holds_on_suite;
    r.note = "aggregative: F(exists) exceeds the largest membership by more than 0.1";
    return r;
  }
  const double c = 0.01;
  const std::size_t m = 100;
  const auto b = BaseSet::indexed(m, "e");
  const std::vector<FuzzySet> args{FuzzySet(b, std::vector<double>(m, c))};
  const auto q = make_exists(b);
  s.probe("no accumulation of low memberships", "exists", args,
          [f, q, args, c] { return std::pair{c + 0.1, f(q, args)}; }, [](double e, double a) { return a <= e; });
  r.witness = s.report().witness;
  r.verdict = Verdict::counterexample_found;
  r.note = "not aggregative: F(exists) equals the largest membership";
  return r;
}

inline PropertyReport check_identity_averaging(QfmModel model, const CheckOptions& opt) {
  Search s(PropertyId::C_identity_averaging, model, opt);
  const auto b4 = BaseSet::indexed(4, "e");
  const std::vector<std::vector<double>> listed{{1, 1, 0, 0}, {.5, .5, .5, .5}, {1, 1, .5, .5}, {.5, .5, 0, 0}};
  auto probe = [](Search& s, const FuzzySet& x) {
    auto f = s.engine();
    const auto q = make_identity(x.base());
    const std::vector<FuzzySet> args{x};
    s.probe_equal("identity against mean", "identity", args, [f, q, args] { return std::pair{args[0].mean(), f(q, args)}; });
  };
  if (model.kind == ModelKind::M || model.kind == ModelKind::MCX) {
    auto f = s.engine();
    for (const auto& v : listed) {
      const double r = f(make_identity(b4), {FuzzySet(b4, v)});
      if (std::abs(r - 0.5) > opt.tol) s.report().anomalies.push_back("identity plateau value " + std::to_string(r));
    }
  }
  Curated curated;
  for (const auto& v : listed) curated.push_back([probe, b4, v](Search& s) { probe(s, FuzzySet(b4, v)); });
  s.run(curated, [probe](Search& s) {
    const auto base = detail::random_base(s.rng(), 1, 8);
    probe(s, random_fuzzy_set(s.rng(), base));
  });
  return s.finish();
}

// Σ F(Qi)(X) over a partition for each argument tuple in `args_list`. A
// violation is a sum away from one.
inline PropertyReport check_ruspini(QfmModel model, const RuspiniPartition& partition,
                                    const std::vector<std::vector<FuzzySet>>& args_list,
                                    const CheckOptions& opt = {}) {
  Search s(PropertyId::C_ruspini_probabilistic, model, opt);
  auto f = s.engine();
  const auto qs = partition.quantifiers();
  for (const auto& args : args_list) {
    if (s.found()) break;
    ++s.report().trials;
    s.probe_equal("sum over partition", "partition of " + std::to_string(qs.size()) + " labels", args, [f, qs, args] {
      double sum = 0.0;
      for (const auto& q : qs) sum += f(q, args);
      return std::pair{1.0, sum};
    });
  }
  return s.finish();
}

namespace detail {

inline bool attains_zero_and_one(const SemiFuzzyQuantifier& q) {
  const std::size_t m = q.base().size();
  bool zero = false, one = false;
  auto see = [&](double v) {
    zero |= v == 0.0;
    one |= v == 1.0;
  };
  if (auto* u = std::get_if<UnaryCardinality>(&q.structure())) {
    for (std::size_t k = 0; k <= m; ++k) see(u->q(k));
  } else if (auto* b = std::get_if<BinaryCardinality>(&q.structure())) {
    for (std::size_t k1 = 0; k1 <= m; ++k1) {
      for (std::size_t k12 = 0; k12 <= k1; ++k12) see(b->q(k1, k12));
    }
  }
  return zero && one;
}

}  // namespace detail

// Random unary and binary instances of the five-label partition, plus the
// all-1/2 input on which three-valued-cut models must answer 1/2 per label.
inline PropertyReport check_ruspini_probabilistic(QfmModel model, const CheckOptions& opt) {
  Search s(PropertyId::C_ruspini_probabilistic, model, opt);
  const auto labels = uniform_triangular_labels(5);
  auto f = s.engine();
  const bool three_valued = model.kind == ModelKind::M || model.kind == ModelKind::MCX || model.kind == ModelKind::FOWA;
  if (three_valued) {
    const auto b = BaseSet::indexed(8, "e");
    const auto part = make_ruspini_partition(labels, 1, b);
    const FuzzySet half(b, std::vector<double>(8, 0.5));
    for (const auto& q : part.quantifiers()) {
      if (!detail::attains_zero_and_one(q)) continue;
      const double v = f(q, {half});
      if (std::abs(v - 0.5) > opt.tol) {
        s.report().anomalies.push_back(q.description() + " on all-1/2 gave " + std::to_string(v));
      }
    }
  }
  auto probe = [](Search& s, const RuspiniPartition& part, const std::vector<FuzzySet>& args) {
    auto f = s.engine();
    const auto qs = part.quantifiers();
    s.probe_equal("sum over partition", "five-label partition", args, [f, qs, args] {
      double sum = 0.0;
      for (const auto& q : qs) sum += f(q, args);
      return std::pair{1.0, sum};
    });
  };
  Curated curated{[labels, probe](Search& s) {
    const auto b = BaseSet::indexed(8, "e");
    probe(s, make_ruspini_partition(labels, 1, b), {FuzzySet(b, std::vector<double>(8, 0.5))});
  }};
  s.run(curated, [labels, probe](Search& s) {
    auto& rng = s.rng();
    const std::size_t n = rng.between(1, 2);
    const auto base = detail::random_base(rng, 1, n == 1 ? 8 : 5);
    probe(s, make_ruspini_partition(labels, n, base), detail::random_args(rng, base, n));
  });
  return s.finish();
}

// |F(Qi)(X) - area(label i)| <= 2/m on the equispaced set μ(a_i) = i/m,
// i = 0..m.
inline PropertyReport check_area_limit(QfmModel model, const std::vector<FuzzyNumberSpec>& labels, std::size_t m,
                                       const CheckOptions& opt = {}) {
  Search s(PropertyId::C_area_limit, model, opt);
  if (model.kind != ModelKind::FMD && model.kind != ModelKind::FI) {
    auto r = s.report();
    r.verdict = Verdict::not_applicable;
    r.note = "area limit is stated for the alpha-cut models only";
    return r;
  }
  const auto b = BaseSet::indexed(m + 1, "a");
  std::vector<double> v(m + 1);
  for (std::size_t i = 0; i <= m; ++i) v[i] = static_cast<double>(i) / static_cast<double>(m);
  const std::vector<FuzzySet> args{FuzzySet(b, v)};
  auto f = s.engine();
  const double bound = 2.0 / static_cast<double>(m);
  for (const auto& spec : labels) {
    ++s.report().trials;
    const auto q = make_from_fuzzy_number(spec, 1, b);
    s.probe("label weight against area", spec.describe(), args,
            [f, q, args, spec] { return std::pair{spec.area(0.0, 1.0), f(q, args)}; },
            [bound](double e, double a) { return std::abs(e - a) > bound; });
  }
  return s.finish();
}

inline PropertyReport check_area_limit_suite(QfmModel model, const CheckOptions& opt) {
  if (model.kind != ModelKind::FMD && model.kind != ModelKind::FI) {
    return check_area_limit(model, {}, 1, opt);
  }
  Search s(PropertyId::C_area_limit, model, opt);
  auto merge = [&s](const PropertyReport& r) {
    s.report().trials += r.trials;
    s.report().max_deviation = std::max(s.report().max_deviation, r.max_deviation);
    if (r.witness && !s.found()) s.report().witness = r.witness;
  };
  merge(check_area_limit(model, uniform_triangular_labels(5), 1000, opt));
  merge(check_area_limit(model, uniform_triangular_labels(2), 1000, opt));
  auto& rng = s.rng();
  for (std::size_t t = 0; t < opt.budget && !s.found(); ++t) {
    const std::size_t r = rng.between(2, 7);
    std::vector<double> centers{0.0, 1.0};
    while (centers.size() < r) {
      const double c = rng.uniform(0.02, 0.98);
      if (std::none_of(centers.begin(), centers.end(), [c](double x) { return std::abs(x - c) < 0.01; })) {
        centers.push_back(c);
      }
    }
    std::sort(centers.begin(), centers.end());
    merge(check_area_limit(model, triangular_labels(centers), rng.between(10, 200), opt));
  }
  return s.finish();
}

namespace detail {

// Raises one coordinate of `x` (one with weight >= 0.05 when `w` is given).
inline std::pair<FuzzySet, std::size_t> raise_one(Rng& rng, const FuzzySet& x, const FuzzySet* w) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.99 && (!w || (*w)[i] >= 0.05)) candidates.push_back(i);
  }
  std::size_t j;
  FuzzySet lo = x;
  if (candidates.empty()) {
    j = rng.index(x.size());
    lo = x.with_membership(j, rng.uniform(0.0, 0.9));
  } else {
    j = candidates[rng.index(candidates.size())];
  }
  return {lo, j};
}

inline void probe_strict(Search& s, const SemiFuzzyQuantifier& q, std::vector<FuzzySet> lo,
                         std::vector<FuzzySet> hi) {
  auto f = s.engine();
  s.probe("single coordinate raised", q.description(), lo, [f, q, lo, hi] { return std::pair{f(q, lo), f(q, hi)}; },
          [](double e, double a) { return a <= e + 1e-12; });
}

inline FuzzyNumberSpec random_h(Rng& rng) {
  return rng.chance(0.3) ? FuzzyNumberSpec::identity() : random_strictly_increasing(rng);
}

}  // namespace detail

// Q_h(Y) = h(|Y|/m) and Q_h(Y1, Y2) = h(|Y1 ∩ Y2|/|Y1|) (1 on empty Y1)
// for strictly increasing h.
inline SemiFuzzyQuantifier make_q_h(const FuzzyNumberSpec& h, std::size_t arity, const BaseSet& base) {
  return make_from_fuzzy_number(h, arity, base, 1.0).with_description("Q_h[" + h.describe() + "]");
}

inline PropertyReport check_discriminative(QfmModel model, std::size_t arity, const CheckOptions& opt) {
  const auto id = arity == 1 ? PropertyId::C_discriminative_unary : PropertyId::C_discriminative_binary;
  Search s(id, model, opt);
  const auto b4 = BaseSet::indexed(4, "e");
  auto fs = [&b4](std::vector<double> v) { return FuzzySet(b4, std::move(v)); };
  Curated curated;
  const auto id_h = FuzzyNumberSpec::identity();
  if (arity == 1) {
    curated.push_back([=](Search& s) {
      detail::probe_strict(s, make_q_h(id_h, 1, b4), {fs({1, 1, 0, 0})}, {fs({1, 1, 0.3, 0})});
    });
  } else {
    const auto w = fs({1, 1, 0.5, 0.5});
    curated.push_back([=](Search& s) {
      detail::probe_strict(s, make_q_h(id_h, 2, b4), {w, fs({1, 1, 0, 0})}, {w, fs({1, 1, 0.5, 0})});
    });
    curated.push_back([=](Search& s) {
      detail::probe_strict(s, make_q_h(id_h, 2, b4), {w, fs({1, 1, 0.5, 0.5})}, {w, fs({1, 1, 1, 0.5})});
    });
  }
  s.run(curated, [arity](Search& s) {
    auto& rng = s.rng();
    const auto base = detail::random_base(rng, 1, 6);
    const auto q = make_q_h(detail::random_h(rng), arity, base);
    const auto x = random_fuzzy_set(rng, base);
    if (arity == 1) {
      auto [lo, j] = detail::raise_one(rng, x, nullptr);
      const auto hi = lo.with_membership(j, rng.uniform(lo[j] + 0.01, 1.0));
      detail::probe_strict(s, q, {lo}, {hi});
    } else {
      auto w = random_fuzzy_set(rng, base);
      auto [lo, j] = detail::raise_one(rng, x, &w);
      if (w[j] < 0.05) w = w.with_membership(j, rng.uniform(0.05, 1.0));
      const auto hi = lo.with_membership(j, rng.uniform(lo[j] + 0.01, 1.0));
      detail::probe_strict(s, q, {w, lo}, {w, hi});
    }
  });
  return s.finish();
}

}  // namespace qfm::harness
