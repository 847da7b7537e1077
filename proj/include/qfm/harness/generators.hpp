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

// Random instances for the property search: fuzzy sets (uniform and the
// adversarial families the known counterexamples cluster in) and
// quantifiers (cardinality tables, fuzzy numbers, general truth tables).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfm/fuzzy_core.hpp"
#include "qfm/fuzzy_number.hpp"
#include "qfm/quantifier.hpp"

namespace qfm::harness {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable per-job seed from the run seed and job labels.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view a, std::string_view b = {}) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : a) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  h = (h ^ 0xff) * 0x100000001b3ULL;
  for (char c : b) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return splitmix64(seed ^ splitmix64(h));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  bool chance(double p) { return uniform() < p; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

enum class MembershipFamily { uniform, all_half, near_crisp, equispaced, quantized };

inline std::vector<double> memberships(Rng& rng, std::size_t m, MembershipFamily f) {
  std::vector<double> v(m);
  switch (f) {
    case MembershipFamily::uniform:
      for (auto& x : v) x = rng.uniform();
      break;
    case MembershipFamily::all_half:
      std::fill(v.begin(), v.end(), 0.5);
      break;
    case MembershipFamily::near_crisp:
      for (auto& x : v) {
        const double d = rng.chance(0.5) ? 0.0 : rng.uniform(0.0, 0.05);
        x = rng.chance(0.5) ? d : 1.0 - d;
      }
      break;
    case MembershipFamily::equispaced:
      for (std::size_t i = 0; i < m; ++i) v[i] = m == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(m - 1);
      std::shuffle(v.begin(), v.end(), rng.engine());
      break;
    case MembershipFamily::quantized:
      for (auto& x : v) x = static_cast<double>(rng.between(0, 10)) / 10.0;
      break;
  }
  return v;
}

inline MembershipFamily random_family(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.5) return MembershipFamily::uniform;
  if (u < 0.6) return MembershipFamily::all_half;
  if (u < 0.75) return MembershipFamily::near_crisp;
  if (u < 0.85) return MembershipFamily::equispaced;
  return MembershipFamily::quantized;
}

inline FuzzySet random_fuzzy_set(Rng& rng, const BaseSet& base) {
  return FuzzySet(base, memberships(rng, base.size(), random_family(rng)));
}

inline CrispSet random_crisp_set(Rng& rng, const BaseSet& base) {
  Bitset b(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) b.set(i, rng.chance(0.5));
  return CrispSet(base, b);
}

// Truth value with extra mass on 0, 1/2 and 1.
inline double random_truth(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.08) return 0.0;
  if (u < 0.16) return 1.0;
  if (u < 0.22) return 0.5;
  return rng.uniform();
}

inline std::vector<double> random_table(Rng& rng, std::size_t n) {
  std::vector<double> t(n);
  for (auto& x : t) x = random_truth(rng);
  return t;
}

inline FuzzyNumberSpec random_fuzzy_number(Rng& rng, DomainKind kind, std::size_t m) {
  const double scale = kind == DomainKind::absolute ? static_cast<double>(m) : 1.0;
  switch (rng.index(4)) {
    case 0: {
      std::vector<double> p{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
      std::sort(p.begin(), p.end());
      return FuzzyNumberSpec::trapezoid(p[0] * scale, p[1] * scale, p[2] * scale, p[3] * scale, kind);
    }
    case 1: {
      double a = rng.uniform(), g = rng.uniform();
      if (a > g) std::swap(a, g);
      if (g - a < 1e-3) g = a + 1e-3;
      return FuzzyNumberSpec::s_shape(a * scale, g * scale, kind);
    }
    case 2: return FuzzyNumberSpec::identity(kind);
    default: {
      const std::size_t n = rng.between(2, 5);
      std::vector<double> xs(n);
      for (auto& x : xs) x = rng.uniform();
      std::sort(xs.begin(), xs.end());
      std::vector<std::pair<double, double>> knots;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && xs[i] <= xs[i - 1] + 1e-9) continue;
        knots.emplace_back(xs[i] * scale, random_truth(rng));
      }
      return FuzzyNumberSpec::piecewise_linear(std::move(knots), kind);
    }
  }
}

enum class QuantifierFamily { cardinality_table, fuzzy_number, general_table };

// General truth tables are used only while arity * m stays small.
inline SemiFuzzyQuantifier random_quantifier(Rng& rng, const BaseSet& base, std::size_t arity,
                                             bool allow_general = true) {
  const std::size_t m = base.size();
  const bool general_ok = allow_general && arity * m <= 8;
  const double u = rng.uniform();
  if (general_ok && u < 0.3) {
    return make_general_table(base, arity, random_table(rng, std::size_t{1} << (arity * m)));
  }
  if (u < 0.65 || arity > 2) {
    if (arity == 1) return make_unary_cardinality(base, random_table(rng, m + 1));
    if (arity == 2) return make_binary_cardinality(base, random_table(rng, (m + 1) * (m + 1)));
    return make_general_table(base, arity, random_table(rng, std::size_t{1} << (arity * m)));
  }
  const auto kind = rng.chance(0.5) ? DomainKind::proportional : DomainKind::absolute;
  return make_from_fuzzy_number(random_fuzzy_number(rng, kind, m), arity, base, random_truth(rng));
}

// Strictly increasing piecewise-linear h on [0,1] with slopes bounded away
// from zero.
inline FuzzyNumberSpec random_strictly_increasing(Rng& rng) {
  const std::size_t n = rng.between(1, 4);
  std::vector<double> xs{0.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.uniform(0.01, 0.99));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(), [](double a, double b) { return b - a < 1e-3; }), xs.end());
  if (xs.back() != 1.0) xs.back() = 1.0;
  std::vector<double> slopes(xs.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    slopes[i] = rng.uniform(0.1, 2.0);
    total += slopes[i] * (xs[i + 1] - xs[i]);
  }
  const double lo = rng.uniform(0.0, 0.2);
  const double span = rng.uniform(0.5, 1.0 - lo);
  std::vector<std::pair<double, double>> knots{{0.0, lo}};
  double y = lo;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    y += slopes[i] * (xs[i + 1] - xs[i]) * span / total;
    knots.emplace_back(xs[i + 1], std::min(1.0, y));
  }
  return FuzzyNumberSpec::piecewise_linear(std::move(knots));
}

}  // namespace qfm::harness
