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

// Probabilistic model F^A: each Xi is read as a random crisp set with
// independent memberships, and Q is averaged over the product distribution.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfm/bitset.hpp"
#include "qfm/detail.hpp"
#include "qfm/error.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/sandwich.hpp"

namespace qfm {

// m_X(Y) = Π_{e∈Y} μ(e) · Π_{e∉Y} (1 - μ(e))
inline double subset_mass(const FuzzySet& x, const CrispSet& y) {
  require_same_base(x.base(), y.base());
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) p *= y.contains(i) ? x[i] : 1.0 - x[i];
  return p;
}

// Law of |Y| (arity 1) or of (|Y1|, |Y1 ∩ Y2|) (arity 2) under F^A's random
// crisp reading.
struct CardinalityDistribution {
  std::size_t m = 0;
  std::size_t arity = 1;
  std::vector<double> p;  // [k] or [k1 * (m + 1) + k12]

  double operator()(std::size_t k) const { return p.at(k); }
  double operator()(std::size_t k1, std::size_t k12) const { return p.at(k1 * (m + 1) + k12); }
  double total() const {
    double s = 0.0;
    for (double v : p) s += v;
    return s;
  }
};

// P(|Y| = k) for k = 0..m.
inline CardinalityDistribution cardinality_distribution(const FuzzySet& x) {
  std::vector<double> p{1.0};
  for (double mu : x.memberships()) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k] * (1.0 - mu);
      next[k + 1] += p[k] * mu;
    }
    p = std::move(next);
  }
  return {x.size(), 1, std::move(p)};
}

// P(|Y1| = k1, |Y1 ∩ Y2| = k12), flattened as [k1 * (m + 1) + k12].
inline CardinalityDistribution joint_cardinality_distribution(const FuzzySet& x1, const FuzzySet& x2) {
  require_same_base(x1.base(), x2.base());
  const std::size_t m = x1.size(), w = m + 1;
  std::vector<double> p(w * w, 0.0), next(w * w);
  p[0] = 1.0;
  for (std::size_t e = 0; e < m; ++e) {
    const double both = x1[e] * x2[e], only1 = x1[e] * (1.0 - x2[e]), none = 1.0 - x1[e];
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t k1 = 0; k1 <= e; ++k1) {
      for (std::size_t k12 = 0; k12 <= k1; ++k12) {
        const double v = p[k1 * w + k12];
        if (v == 0.0) continue;
        next[k1 * w + k12] += v * none;
        next[(k1 + 1) * w + k12] += v * only1;
        next[(k1 + 1) * w + k12 + 1] += v * both;
      }
    }
    std::swap(p, next);
  }
  return {m, 2, std::move(p)};
}

namespace detail {

inline void fa_enumerate_capacity(std::size_t arity, std::size_t m, const EngineLimits& limits) {
  const bool ok = arity == 1   ? m <= limits.fa_max_unary_size
                  : arity == 2 ? m <= limits.fa_max_binary_size
                               : arity * m <= limits.fa_max_total_bits;
  if (!ok) {
    throw CapacityError("F^A subset enumeration for arity " + std::to_string(arity) + " over " +
                        std::to_string(m) + " elements exceeds the configured limit");
  }
}

}  // namespace detail

// Reference path: Σ_{Y1..Yn} Q(Y1..Yn) Π m_Xi(Yi). Subsets of zero mass are skipped.
inline TruthValue eval_fa_enumerate(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                                    const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  const std::size_t n = args.size(), m = q.base().size();
  if (n == 0) return q.eval_bits({});
  detail::fa_enumerate_capacity(n, m, limits);

  std::vector<std::vector<std::pair<Bitset, double>>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mu = args[i].memberships();
    std::vector<std::pair<std::uint64_t, double>> masses{{0, 1.0}};
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<std::pair<std::uint64_t, double>> next;
      for (auto [mask, p] : masses) {
        if (mu[e] < 1.0) next.emplace_back(mask, p * (1.0 - mu[e]));
        if (mu[e] > 0.0) next.emplace_back(mask | (std::uint64_t{1} << e), p * mu[e]);
      }
      masses = std::move(next);
    }
    for (auto [mask, p] : masses) support[i].emplace_back(Bitset::from_u64(m, mask), p);
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<Bitset> y(n);
  double sum = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = support[i][idx[i]].first;
      w *= support[i][idx[i]].second;
    }
    sum += w * q.eval_bits(y);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < support[i].size()) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  return detail::clamp_unit(sum);
}

// Cardinality-tagged quantifiers use the distributions above; anything else
// falls back to enumeration.
inline TruthValue eval_fa(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                          const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  if (auto* un = std::get_if<UnaryCardinality>(&q.structure())) {
    const auto p = cardinality_distribution(args[0]).p;
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] != 0.0) sum += p[k] * un->q(k);
    }
    return detail::clamp_unit(sum);
  }
  if (auto* bin = std::get_if<BinaryCardinality>(&q.structure())) {
    const std::size_t w = q.base().size() + 1;
    const auto p = joint_cardinality_distribution(args[0], args[1]).p;
    double sum = 0.0;
    for (std::size_t k1 = 0; k1 < w; ++k1) {
      for (std::size_t k12 = 0; k12 <= k1; ++k12) {
        if (p[k1 * w + k12] != 0.0) sum += p[k1 * w + k12] * bin->q(k1, k12);
      }
    }
    return detail::clamp_unit(sum);
  }
  return eval_fa_enumerate(q, args, limits);
}

inline TruthValue eval_fa(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_fa(q, std::span<const FuzzySet>(args.begin(), args.size()));
}

}  // namespace qfm
