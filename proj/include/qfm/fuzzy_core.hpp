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

// Finite-domain fuzzy sets, alpha-cuts, three-valued cuts, the fuzziness
// order and the connectives induced by the evaluation engines.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfm/bitset.hpp"
#include "qfm/error.hpp"

namespace qfm {

using TruthValue = double;

// Default comparison tolerance for "exact" results.
inline constexpr double kTolerance = 1e-9;

inline bool is_truth_value(double x) { return x >= 0.0 && x <= 1.0; }

// An ordered, non-empty list of distinct element identifiers. Copies share
// the underlying storage; two base sets compare equal when they list the
// same identifiers in the same order.
class BaseSet {
 public:
  explicit BaseSet(std::vector<std::string> elements) {
    if (elements.empty()) throw ArgumentError("base set must be non-empty");
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!impl->index.emplace(elements[i], i).second) {
        throw ArgumentError("duplicate base-set element '" + elements[i] + "'");
      }
    }
    impl->elements = std::move(elements);
    impl_ = std::move(impl);
  }
  BaseSet(std::initializer_list<std::string> elements)
      : BaseSet(std::vector<std::string>(elements)) {}

  // Base set {prefix1, ..., prefixM}.
  static BaseSet indexed(std::size_t m, std::string_view prefix = "e") {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return BaseSet(std::move(names));
  }

  std::size_t size() const { return impl_->elements.size(); }
  const std::string& element(std::size_t i) const { return impl_->elements.at(i); }
  const std::vector<std::string>& elements() const { return impl_->elements; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = impl_->index.find(std::string(id));
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_index(std::string_view id) const {
    auto i = index_of(id);
    if (!i) throw ArgumentError("unknown base-set element '" + std::string(id) + "'");
    return *i;
  }

  friend bool operator==(const BaseSet& a, const BaseSet& b) {
    return a.impl_ == b.impl_ || a.impl_->elements == b.impl_->elements;
  }

 private:
  struct Impl {
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Impl> impl_;
};

inline void require_same_base(const BaseSet& a, const BaseSet& b) {
  if (!(a == b)) throw ArgumentError("base-set mismatch");
}

// A crisp subset of a base set.
class CrispSet {
 public:
  explicit CrispSet(BaseSet base) : base_(std::move(base)), bits_(base_.size()) {}
  CrispSet(BaseSet base, Bitset bits) : base_(std::move(base)), bits_(std::move(bits)) {
    if (bits_.size() != base_.size()) throw ArgumentError("bitset size does not match base set");
  }
  CrispSet(BaseSet base, std::initializer_list<std::string_view> members)
      : CrispSet(std::move(base)) {
    for (auto id : members) bits_.set(base_.require_index(id));
  }
  CrispSet(BaseSet base, const std::vector<std::string>& members) : CrispSet(std::move(base)) {
    for (const auto& id : members) bits_.set(base_.require_index(id));
  }

  static CrispSet full(BaseSet base) {
    auto n = base.size();
    return CrispSet(std::move(base), Bitset::full(n));
  }

  const BaseSet& base() const { return base_; }
  const Bitset& bits() const { return bits_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(std::string_view id) const { return bits_.test(base_.require_index(id)); }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    for (auto i : bits_.indices()) out.push_back(base_.element(i));
    return out;
  }

  CrispSet complement() const { return CrispSet(base_, bits_.complement()); }
  bool is_subset_of(const CrispSet& o) const {
    require_same_base(base_, o.base_);
    return bits_.is_subset_of(o.bits_);
  }

  friend bool operator==(const CrispSet& a, const CrispSet& b) {
    return a.base_ == b.base_ && a.bits_ == b.bits_;
  }

 private:
  BaseSet base_;
  Bitset bits_;
};

// Membership map from a base set into [0,1].
class FuzzySet {
 public:
  FuzzySet(BaseSet base, std::vector<TruthValue> memberships)
      : base_(std::move(base)), mu_(std::move(memberships)) {
    if (mu_.size() != base_.size()) {
      throw ArgumentError("fuzzy set needs " + std::to_string(base_.size()) +
                          " memberships, got " + std::to_string(mu_.size()));
    }
    for (std::size_t i = 0; i < mu_.size(); ++i) {
      if (!is_truth_value(mu_[i])) {
        throw ArgumentError("membership of '" + base_.element(i) + "' outside [0,1]");
      }
    }
  }

  // Fuzzy set on the indexed base {e1..em}.
  static FuzzySet on_indexed(std::vector<TruthValue> memberships) {
    auto n = memberships.size();
    return FuzzySet(BaseSet::indexed(n), std::move(memberships));
  }
  static FuzzySet from_crisp(const CrispSet& y) {
    std::vector<TruthValue> mu(y.base().size(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = y.contains(i) ? 1.0 : 0.0;
    return FuzzySet(y.base(), std::move(mu));
  }

  const BaseSet& base() const { return base_; }
  std::size_t size() const { return mu_.size(); }
  TruthValue operator[](std::size_t i) const { return mu_[i]; }
  TruthValue membership(std::string_view id) const { return mu_[base_.require_index(id)]; }
  std::span<const TruthValue> memberships() const { return mu_; }

  bool is_crisp() const {
    return std::all_of(mu_.begin(), mu_.end(), [](double v) { return v == 0.0 || v == 1.0; });
  }

  FuzzySet with_membership(std::size_t i, TruthValue value) const {
    auto mu = mu_;
    mu.at(i) = value;
    return FuzzySet(base_, std::move(mu));
  }

  double mean() const {
    double s = 0.0;
    for (auto v : mu_) s += v;
    return s / static_cast<double>(mu_.size());
  }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  BaseSet base_;
  std::vector<TruthValue> mu_;
};

namespace detail {

inline Bitset cut_bits(std::span<const TruthValue> mu, double level, bool strict) {
  Bitset b(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (strict ? mu[i] > level : mu[i] >= level) b.set(i);
  }
  return b;
}

// X_γ^min and X_γ^max as raw bitsets.
inline std::pair<Bitset, Bitset> three_valued_bits(std::span<const TruthValue> mu, double gamma) {
  if (gamma == 0.0) return {cut_bits(mu, 0.5, true), cut_bits(mu, 0.5, false)};
  return {cut_bits(mu, 0.5 + 0.5 * gamma, false), cut_bits(mu, 0.5 - 0.5 * gamma, true)};
}

}  // namespace detail

// {e : μ_X(e) ≥ α}
inline CrispSet alpha_cut(const FuzzySet& x, TruthValue alpha) {
  return CrispSet(x.base(), detail::cut_bits(x.memberships(), alpha, false));
}

// {e : μ_X(e) > α}
inline CrispSet strict_alpha_cut(const FuzzySet& x, TruthValue alpha) {
  return CrispSet(x.base(), detail::cut_bits(x.memberships(), alpha, true));
}

struct ThreeValuedCut {
  CrispSet min;
  CrispSet max;
};

// Cautiousness cut at level γ; min ⊆ max always.
inline ThreeValuedCut three_valued_cut(const FuzzySet& x, TruthValue gamma) {
  if (!is_truth_value(gamma)) throw ArgumentError("cautiousness level outside [0,1]");
  auto [lo, hi] = detail::three_valued_bits(x.memberships(), gamma);
  return {CrispSet(x.base(), std::move(lo)), CrispSet(x.base(), std::move(hi))};
}

inline TruthValue fuzzy_median(TruthValue u1, TruthValue u2) {
  const double lo = std::min(u1, u2), hi = std::max(u1, u2);
  if (lo > 0.5) return lo;
  if (hi < 0.5) return hi;
  return 0.5;
}

// x ≼_c y: y ≤ x ≤ ½ or ½ ≤ x ≤ y, i.e. x is at least as fuzzy as y.
// A positive tolerance widens every comparison.
inline bool fuzzier_or_equal(TruthValue x, TruthValue y, double tol = 0.0) {
  return (y <= x + tol && x <= 0.5 + tol) || (0.5 <= x + tol && x <= y + tol);
}

// Pointwise X ≼_c X′.
inline bool fuzzier_or_equal(const FuzzySet& x, const FuzzySet& x_prime, double tol = 0.0) {
  require_same_base(x.base(), x_prime.base());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!fuzzier_or_equal(x[i], x_prime[i], tol)) return false;
  }
  return true;
}

// Negation, t-norm and t-conorm induced by an engine.
struct InducedLogic {
  enum class Family { standard, probabilistic };
  Family family = Family::standard;

  TruthValue negation(TruthValue x) const { return 1.0 - x; }
  TruthValue conjunction(TruthValue x, TruthValue y) const {
    return family == Family::standard ? std::min(x, y) : x * y;
  }
  TruthValue disjunction(TruthValue x, TruthValue y) const {
    return family == Family::standard ? std::max(x, y) : x + y - x * y;
  }
  // ¬x ∨ y
  TruthValue implication(TruthValue x, TruthValue y) const {
    return disjunction(negation(x), y);
  }

  friend bool operator==(const InducedLogic&, const InducedLogic&) = default;
};

inline InducedLogic standard_logic() { return {InducedLogic::Family::standard}; }
inline InducedLogic probabilistic_logic() { return {InducedLogic::Family::probabilistic}; }

inline FuzzySet complement(const FuzzySet& x) {
  std::vector<TruthValue> mu(x.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = 1.0 - x[i];
  return FuzzySet(x.base(), std::move(mu));
}

inline FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b, const InducedLogic& logic) {
  require_same_base(a.base(), b.base());
  std::vector<TruthValue> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::clamp(logic.disjunction(a[i], b[i]), 0.0, 1.0);
  return FuzzySet(a.base(), std::move(mu));
}

inline FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b, const InducedLogic& logic) {
  require_same_base(a.base(), b.base());
  std::vector<TruthValue> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::clamp(logic.conjunction(a[i], b[i]), 0.0, 1.0);
  return FuzzySet(a.base(), std::move(mu));
}

}  // namespace qfm
