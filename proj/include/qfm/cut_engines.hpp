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

// Engines built on three-valued cuts: M, F_owa and M_CX.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qfm/bitset.hpp"
#include "qfm/detail.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/sandwich.hpp"

namespace qfm {

// ⊤ and ⊥ of Q at a cut level γ.
inline SandwichRange top_bottom_at(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args, double gamma,
                                   const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  std::vector<Bitset> lo, hi;
  for (const auto& x : args) {
    auto [mn, mx] = detail::three_valued_bits(x.memberships(), gamma);
    lo.push_back(std::move(mn));
    hi.push_back(std::move(mx));
  }
  if (args.empty()) {
    const double v = q.eval_bits({});
    return {v, v};
  }
  return sandwich_range(q, lo, hi, limits);
}

// S_{Q,X}(γ) = med½(⊤(γ), ⊥(γ))
inline TruthValue s_profile_at(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args, double gamma,
                               const EngineLimits& limits = {}) {
  const auto r = top_bottom_at(q, args, gamma, limits);
  return fuzzy_median(r.sup, r.inf);
}

// ⊤ and ⊥ as step functions of γ on [0, 1].
struct GammaProfile {
  struct Interval {
    double lo, hi;
    TruthValue top, bottom;
    double width;  // hi - lo, computed without cancellation
  };
  std::vector<Interval> intervals;

  double integral_top() const {
    double s = 0.0;
    for (const auto& iv : intervals) s += iv.width * iv.top;
    return s;
  }
  double integral_bottom() const {
    double s = 0.0;
    for (const auto& iv : intervals) s += iv.width * iv.bottom;
    return s;
  }
  double integral_median() const {
    double s = 0.0;
    for (const auto& iv : intervals) s += iv.width * fuzzy_median(iv.top, iv.bottom);
    return s;
  }
};

inline GammaProfile gamma_profile(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                                  const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  // Breakpoints are tracked as d = min(μ, 1 - μ), so γ = 1 - 2d; both
  // 1 - μ (μ >= 0.5) and the doubling are exact.
  std::vector<double> ds{0.0, 0.5};
  for (const auto& x : args) {
    for (double mu : x.memberships()) ds.push_back(std::min(mu, 1.0 - mu));
  }
  ds = detail::coalesce(std::move(ds));
  GammaProfile p;
  for (std::size_t j = ds.size() - 1; j > 0; --j) {
    const double hi = ds[j], lo = ds[j - 1];
    const auto r = top_bottom_at(q, args, 1.0 - (lo + hi), limits);
    p.intervals.push_back({1.0 - 2.0 * hi, 1.0 - 2.0 * lo, r.sup, r.inf, 2.0 * (hi - lo)});
  }
  return p;
}

// M(Q)(X) = ∫₀¹ S_{Q,X}(γ) dγ
inline TruthValue eval_m(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                         const EngineLimits& limits = {}) {
  return detail::clamp_unit(gamma_profile(q, args, limits).integral_median());
}

// F_owa(Q)(X) = ½∫⊤ + ½∫⊥
inline TruthValue eval_fowa(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                            const EngineLimits& limits = {}) {
  const auto p = gamma_profile(q, args, limits);
  return detail::clamp_unit(0.5 * p.integral_top() + 0.5 * p.integral_bottom());
}

// M_CX(Q)(X) = sup over z of min(z, best(z)), where best(z) is the largest
// inf Q[V, W] over pairs V ⊆ W with Ξ_{V,W}(X) ≥ z. For z > ½ the optimum is
// V = {μ ≥ z}, W = {μ > 1-z}; for z ≤ ½ it is V = W = Y for the best Y between
// {μ > 1-z} and {μ ≥ z}. best is a non-increasing step function, so the sup
// is taken at the right end of each step.
inline TruthValue eval_mcx(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                           const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  if (args.empty()) return q.eval_bits({});
  std::vector<double> levels{0.0, 0.5, 1.0};
  for (const auto& x : args) {
    for (double mu : x.memberships()) {
      levels.push_back(mu);
      levels.push_back(1.0 - mu);
    }
  }
  levels = detail::coalesce(std::move(levels));
  double result = 0.0;
  std::vector<Bitset> ge(args.size()), gt(args.size());
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const double hi = levels[j + 1];
    if (hi <= result) continue;
    const double z = 0.5 * (levels[j] + hi);
    for (std::size_t i = 0; i < args.size(); ++i) {
      ge[i] = detail::cut_bits(args[i].memberships(), z, false);
      gt[i] = detail::cut_bits(args[i].memberships(), 1.0 - z, true);
    }
    const double best = z > 0.5 ? sandwich_range(q, ge, gt, limits).inf : sandwich_range(q, gt, ge, limits).sup;
    result = std::max(result, std::min(hi, best));
  }
  return result;
}

inline TruthValue eval_m(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_m(q, std::span<const FuzzySet>(args.begin(), args.size()));
}
inline TruthValue eval_fowa(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_fowa(q, std::span<const FuzzySet>(args.begin(), args.size()));
}
inline TruthValue eval_mcx(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_mcx(q, std::span<const FuzzySet>(args.begin(), args.size()));
}

}  // namespace qfm
