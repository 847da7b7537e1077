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

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qfm/error.hpp"
#include "qfm/fuzzy_number.hpp"
#include "qfm/quantifier.hpp"

namespace qfm {

// Hat functions over sorted centers 0 = c0 < c1 < ... < c(r-1) = 1. Any
// such family sums to one on [0,1].
inline std::vector<FuzzyNumberSpec> triangular_labels(const std::vector<double>& centers) {
  if (centers.size() < 2) throw ArgumentError("a label family needs at least two centers");
  if (centers.front() != 0.0 || centers.back() != 1.0) {
    throw ArgumentError("label centers must start at 0 and end at 1");
  }
  std::vector<FuzzyNumberSpec> out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i > 0 && !(centers[i] > centers[i - 1])) {
      throw ArgumentError("label centers must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    std::vector<std::pair<double, double>> knots;
    if (i > 0) knots.emplace_back(centers[i - 1], 0.0);
    knots.emplace_back(centers[i], 1.0);
    if (i + 1 < centers.size()) knots.emplace_back(centers[i + 1], 0.0);
    out.push_back(FuzzyNumberSpec::piecewise_linear(std::move(knots)));
  }
  return out;
}

// nearly_none, a_few, several, many, nearly_all (r = 5) or any r >= 2.
inline std::vector<FuzzyNumberSpec> uniform_triangular_labels(std::size_t r) {
  std::vector<double> centers(r);
  for (std::size_t i = 0; i < r; ++i) centers[i] = static_cast<double>(i) / static_cast<double>(r - 1);
  centers.back() = 1.0;
  return triangular_labels(centers);
}

// Quantifiers Q1..Qr with Σ Qi(Y...) = 1 on every crisp input.
class RuspiniPartition {
 public:
  const std::vector<SemiFuzzyQuantifier>& quantifiers() const { return quantifiers_; }
  const std::vector<FuzzyNumberSpec>& labels() const { return labels_; }
  std::size_t size() const { return quantifiers_.size(); }
  std::size_t arity() const { return arity_; }
  const BaseSet& base() const { return quantifiers_.front().base(); }

 private:
  friend RuspiniPartition make_ruspini_partition(const std::vector<FuzzyNumberSpec>&, std::size_t,
                                                 const BaseSet&, std::optional<double>);
  std::vector<SemiFuzzyQuantifier> quantifiers_;
  std::vector<FuzzyNumberSpec> labels_;
  std::size_t arity_ = 1;
};

// Builds and validates a partition. Proportional label families are
// checked on a 1e-3 grid over [0,1]; absolute ones on 0..m. The binary
// empty-restriction value defaults to 1/r and must equal it. The crisp
// invariant is then verified over every reachable cardinality profile.
inline RuspiniPartition make_ruspini_partition(const std::vector<FuzzyNumberSpec>& specs,
                                               std::size_t arity, const BaseSet& base,
                                               std::optional<double> empty_value = std::nullopt) {
  constexpr double tol = 1e-9;
  if (specs.empty()) throw ArgumentError("empty label family");
  const double r = static_cast<double>(specs.size());
  const DomainKind kind = specs.front().domain();
  for (const auto& s : specs) {
    if (s.domain() != kind) throw ArgumentError("label family mixes absolute and proportional specs");
  }
  auto check_point = [&](double x) {
    double sum = 0.0;
    for (const auto& s : specs) sum += s(x);
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream os;
      os.precision(17);
      os << "label family is not a Ruspini partition: sum " << sum << " at x = " << x;
      throw ArgumentError(os.str());
    }
  };
  const std::size_t m = base.size();
  if (kind == DomainKind::proportional) {
    for (int i = 0; i <= 1000; ++i) check_point(i / 1000.0);
  } else {
    for (std::size_t k = 0; k <= m; ++k) check_point(static_cast<double>(k));
  }
  double empty = 1.0 / r;
  if (empty_value) {
    if (std::abs(*empty_value - 1.0 / r) > tol) {
      throw ArgumentError("empty-restriction value must be 1/r for a Ruspini partition");
    }
    empty = *empty_value;
  }

  RuspiniPartition p;
  p.arity_ = arity;
  p.labels_ = specs;
  for (const auto& s : specs) p.quantifiers_.push_back(make_from_fuzzy_number(s, arity, base, empty));

  auto verify = [&](auto&& value_at) {
    double sum = 0.0;
    for (const auto& q : p.quantifiers_) sum += value_at(q);
    if (std::abs(sum - 1.0) > tol) throw ArgumentError("partition violates the crisp sum-to-one invariant");
  };
  if (arity == 1) {
    for (std::size_t k = 0; k <= m; ++k) {
      verify([&](const SemiFuzzyQuantifier& q) { return std::get<UnaryCardinality>(q.structure()).q(k); });
    }
  } else {
    for (std::size_t k1 = 0; k1 <= m; ++k1) {
      for (std::size_t k12 = 0; k12 <= k1; ++k12) {
        verify([&](const SemiFuzzyQuantifier& q) {
          return std::get<BinaryCardinality>(q.structure()).q(k1, k12);
        });
      }
    }
  }
  return p;
}

}  // namespace qfm
