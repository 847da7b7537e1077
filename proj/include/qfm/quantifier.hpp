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

// Semi-fuzzy quantifiers: construction and linguistic transformations.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfm/bitset.hpp"
#include "qfm/error.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/fuzzy_number.hpp"

namespace qfm {

// Structure tags. They describe the evaluator exactly and let engines take
// cardinality-based fast paths; a general quantifier is always valid.
struct GeneralStructure {};
// Q(Y) = q(|Y|)
struct UnaryCardinality {
  std::function<double(std::size_t)> q;
};
// Q(Y1, Y2) = q(|Y1|, |Y1 ∩ Y2|)
struct BinaryCardinality {
  std::function<double(std::size_t, std::size_t)> q;
};
using QuantifierStructure = std::variant<GeneralStructure, UnaryCardinality, BinaryCardinality>;

using Evaluator = std::function<double(std::span<const Bitset>)>;

class SemiFuzzyQuantifier {
 public:
  SemiFuzzyQuantifier(BaseSet base, std::size_t arity, Evaluator evaluator, std::string description)
      : base_(std::move(base)),
        arity_(arity),
        evaluator_(std::move(evaluator)),
        structure_(GeneralStructure{}),
        description_(std::move(description)) {}

  static SemiFuzzyQuantifier unary_cardinality(BaseSet base, std::function<double(std::size_t)> q,
                                               std::string description) {
    Evaluator ev = [q](std::span<const Bitset> y) { return q(y[0].count()); };
    SemiFuzzyQuantifier out(std::move(base), 1, std::move(ev), std::move(description));
    out.structure_ = UnaryCardinality{std::move(q)};
    return out;
  }

  static SemiFuzzyQuantifier binary_cardinality(BaseSet base,
                                                std::function<double(std::size_t, std::size_t)> q,
                                                std::string description) {
    Evaluator ev = [q](std::span<const Bitset> y) { return q(y[0].count(), y[0].count_and(y[1])); };
    SemiFuzzyQuantifier out(std::move(base), 2, std::move(ev), std::move(description));
    out.structure_ = BinaryCardinality{std::move(q)};
    return out;
  }

  const BaseSet& base() const { return base_; }
  std::size_t arity() const { return arity_; }
  const QuantifierStructure& structure() const { return structure_; }
  bool is_general() const { return std::holds_alternative<GeneralStructure>(structure_); }
  const std::string& description() const { return description_; }

  // Fuzzy number the quantifier was built from, when any.
  const std::optional<FuzzyNumberSpec>& spec() const { return spec_; }
  std::optional<double> empty_restriction_value() const { return empty_value_; }

  // Unchecked evaluation on raw bitsets; `args.size()` must equal arity().
  double eval_bits(std::span<const Bitset> args) const { return evaluator_(args); }

  double operator()(std::span<const CrispSet> args) const {
    if (args.size() != arity_) {
      throw ArgumentError("quantifier of arity " + std::to_string(arity_) + " applied to " +
                          std::to_string(args.size()) + " arguments");
    }
    std::vector<Bitset> bits;
    bits.reserve(args.size());
    for (const auto& a : args) {
      require_same_base(base_, a.base());
      bits.push_back(a.bits());
    }
    const double v = evaluator_(bits);
    if (!is_truth_value(v)) throw ArgumentError("quantifier '" + description_ + "' left [0,1]");
    return v;
  }
  double operator()(std::initializer_list<CrispSet> args) const {
    return (*this)(std::span<const CrispSet>(args.begin(), args.size()));
  }

  SemiFuzzyQuantifier with_description(std::string d) const {
    auto out = *this;
    out.description_ = std::move(d);
    return out;
  }
  SemiFuzzyQuantifier with_spec(FuzzyNumberSpec spec, std::optional<double> empty_value) const {
    auto out = *this;
    out.spec_ = std::move(spec);
    out.empty_value_ = empty_value;
    return out;
  }
  // Drops the structure tag and spec metadata (same evaluator).
  SemiFuzzyQuantifier as_general() const {
    return SemiFuzzyQuantifier(base_, arity_, evaluator_, description_);
  }

 private:
  BaseSet base_;
  std::size_t arity_;
  Evaluator evaluator_;
  QuantifierStructure structure_;
  std::string description_;
  std::optional<FuzzyNumberSpec> spec_;
  std::optional<double> empty_value_;
};

// ---------------------------------------------------------------------------
// Constructors

inline SemiFuzzyQuantifier make_exists(const BaseSet& base) {
  return SemiFuzzyQuantifier::unary_cardinality(
      base, [](std::size_t k) { return k > 0 ? 1.0 : 0.0; }, "exists");
}

inline SemiFuzzyQuantifier make_forall(const BaseSet& base) {
  const std::size_t m = base.size();
  return SemiFuzzyQuantifier::unary_cardinality(
      base, [m](std::size_t k) { return k == m ? 1.0 : 0.0; }, "forall");
}

inline SemiFuzzyQuantifier make_all_binary(const BaseSet& base) {
  return SemiFuzzyQuantifier::binary_cardinality(
      base, [](std::size_t k1, std::size_t k12) { return k12 == k1 ? 1.0 : 0.0; }, "all");
}

inline SemiFuzzyQuantifier make_some_binary(const BaseSet& base) {
  return SemiFuzzyQuantifier::binary_cardinality(
      base, [](std::size_t, std::size_t k12) { return k12 > 0 ? 1.0 : 0.0; }, "some");
}

inline SemiFuzzyQuantifier make_unary_cardinality(const BaseSet& base, std::vector<double> table,
                                                  std::string description = "unary table") {
  if (table.size() != base.size() + 1) throw ArgumentError("unary table needs m+1 entries");
  for (double v : table) {
    if (!is_truth_value(v)) throw ArgumentError("quantifier table value outside [0,1]");
  }
  auto t = std::make_shared<const std::vector<double>>(std::move(table));
  return SemiFuzzyQuantifier::unary_cardinality(
      base, [t](std::size_t k) { return (*t)[k]; }, std::move(description));
}

// table[k1 * (m+1) + k12], entries with k12 > k1 are never read.
inline SemiFuzzyQuantifier make_binary_cardinality(const BaseSet& base, std::vector<double> table,
                                                   std::string description = "binary table") {
  const std::size_t w = base.size() + 1;
  if (table.size() != w * w) throw ArgumentError("binary table needs (m+1)^2 entries");
  for (double v : table) {
    if (!is_truth_value(v)) throw ArgumentError("quantifier table value outside [0,1]");
  }
  auto t = std::make_shared<const std::vector<double>>(std::move(table));
  return SemiFuzzyQuantifier::binary_cardinality(
      base, [t, w](std::size_t k1, std::size_t k12) { return (*t)[k1 * w + k12]; },
      std::move(description));
}

// Arbitrary (non-quantitative) quantifier given by its full truth table,
// indexed by the concatenated membership bits of Y1..Yn (Y1 lowest).
inline SemiFuzzyQuantifier make_general_table(const BaseSet& base, std::size_t arity, std::vector<double> table,
                                              std::string description = "general table") {
  const std::size_t m = base.size();
  if (arity * m > 24) throw CapacityError("general truth tables are limited to arity * m <= 24");
  if (table.size() != (std::size_t{1} << (arity * m))) {
    throw ArgumentError("general table needs 2^(arity*m) entries");
  }
  for (double v : table) {
    if (!is_truth_value(v)) throw ArgumentError("quantifier table value outside [0,1]");
  }
  auto t = std::make_shared<const std::vector<double>>(std::move(table));
  return SemiFuzzyQuantifier(
      base, arity,
      [t, m](std::span<const Bitset> y) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < y.size(); ++i) idx |= y[i].to_u64() << (i * m);
        return (*t)[idx];
      },
      std::move(description));
}

// Quantifier from a fuzzy number. Absolute specs read |Y| (unary) or
// |Y1 ∩ Y2| (binary); proportional specs read |Y|/|E| (unary) or
// |Y1 ∩ Y2|/|Y1| (binary), with `empty_value` when Y1 = ∅.
inline SemiFuzzyQuantifier make_from_fuzzy_number(const FuzzyNumberSpec& spec, std::size_t arity,
                                                  const BaseSet& base, double empty_value = 1.0) {
  if (arity != 1 && arity != 2) throw ArgumentError("fuzzy-number quantifiers are unary or binary");
  if (!is_truth_value(empty_value)) throw ArgumentError("empty-restriction value outside [0,1]");
  const std::size_t m = base.size();
  const std::string desc = spec.describe();
  if (arity == 1) {
    std::function<double(std::size_t)> q;
    if (spec.domain() == DomainKind::absolute) {
      q = [spec](std::size_t k) { return spec(static_cast<double>(k)); };
    } else {
      q = [spec, m](std::size_t k) { return spec(static_cast<double>(k) / static_cast<double>(m)); };
    }
    return SemiFuzzyQuantifier::unary_cardinality(base, std::move(q), desc).with_spec(spec, std::nullopt);
  }
  std::function<double(std::size_t, std::size_t)> q;
  if (spec.domain() == DomainKind::absolute) {
    q = [spec](std::size_t, std::size_t k12) { return spec(static_cast<double>(k12)); };
    return SemiFuzzyQuantifier::binary_cardinality(base, std::move(q), desc).with_spec(spec, std::nullopt);
  }
  q = [spec, empty_value](std::size_t k1, std::size_t k12) {
    if (k1 == 0) return empty_value;
    return spec(static_cast<double>(k12) / static_cast<double>(k1));
  };
  return SemiFuzzyQuantifier::binary_cardinality(base, std::move(q), desc).with_spec(spec, empty_value);
}

// identity(Y) = |Y| / |E|
inline SemiFuzzyQuantifier make_identity(const BaseSet& base) {
  return make_from_fuzzy_number(FuzzyNumberSpec::identity(), 1, base).with_description("identity");
}

// π_e(Y) = [e ∈ Y], deliberately untagged.
inline SemiFuzzyQuantifier make_projection(const BaseSet& base, std::size_t element) {
  if (element >= base.size()) throw ArgumentError("projection element out of range");
  return SemiFuzzyQuantifier(
      base, 1, [element](std::span<const Bitset> y) { return y[0].test(element) ? 1.0 : 0.0; },
      "projection[" + base.element(element) + "]");
}

// ---------------------------------------------------------------------------
// Transformations

// (¬Q)(Y...) = 1 − Q(Y...)
inline SemiFuzzyQuantifier external_negation(const SemiFuzzyQuantifier& q) {
  const std::string desc = "not(" + q.description() + ")";
  if (auto* u = std::get_if<UnaryCardinality>(&q.structure())) {
    return SemiFuzzyQuantifier::unary_cardinality(
        q.base(), [f = u->q](std::size_t k) { return 1.0 - f(k); }, desc);
  }
  if (auto* b = std::get_if<BinaryCardinality>(&q.structure())) {
    return SemiFuzzyQuantifier::binary_cardinality(
        q.base(), [f = b->q](std::size_t k1, std::size_t k12) { return 1.0 - f(k1, k12); }, desc);
  }
  return SemiFuzzyQuantifier(
      q.base(), q.arity(), [q](std::span<const Bitset> y) { return 1.0 - q.eval_bits(y); }, desc);
}

// Q¬(Y1, ..., Yn) = Q(Y1, ..., ¬Yn)
inline SemiFuzzyQuantifier internal_negation(const SemiFuzzyQuantifier& q) {
  if (q.arity() == 0) throw ArgumentError("internal negation needs arity >= 1");
  const std::string desc = "antonym(" + q.description() + ")";
  const std::size_t m = q.base().size();
  if (auto* u = std::get_if<UnaryCardinality>(&q.structure())) {
    return SemiFuzzyQuantifier::unary_cardinality(
        q.base(), [f = u->q, m](std::size_t k) { return f(m - k); }, desc);
  }
  if (auto* b = std::get_if<BinaryCardinality>(&q.structure())) {
    return SemiFuzzyQuantifier::binary_cardinality(
        q.base(), [f = b->q](std::size_t k1, std::size_t k12) { return f(k1, k1 - k12); }, desc);
  }
  return SemiFuzzyQuantifier(
      q.base(), q.arity(),
      [q](std::span<const Bitset> y) {
        std::vector<Bitset> v(y.begin(), y.end());
        v.back() = v.back().complement();
        return q.eval_bits(v);
      },
      desc);
}

// Q□ = ¬(Q¬)
inline SemiFuzzyQuantifier dual(const SemiFuzzyQuantifier& q) {
  return external_negation(internal_negation(q)).with_description("dual(" + q.description() + ")");
}

// Q∪(Y1, ..., Yn+1) = Q(Y1, ..., Yn ∪ Yn+1)
inline SemiFuzzyQuantifier internal_join(const SemiFuzzyQuantifier& q) {
  if (q.arity() == 0) throw ArgumentError("internal join needs arity >= 1");
  return SemiFuzzyQuantifier(
      q.base(), q.arity() + 1,
      [q](std::span<const Bitset> y) {
        std::vector<Bitset> v(y.begin(), y.end() - 1);
        v.back() |= y.back();
        return q.eval_bits(v);
      },
      "join(" + q.description() + ")");
}

// Q∩(Y1, ..., Yn+1) = Q(Y1, ..., Yn ∩ Yn+1)
inline SemiFuzzyQuantifier internal_meet(const SemiFuzzyQuantifier& q) {
  if (q.arity() == 0) throw ArgumentError("internal meet needs arity >= 1");
  const std::string desc = "meet(" + q.description() + ")";
  if (auto* u = std::get_if<UnaryCardinality>(&q.structure())) {
    return SemiFuzzyQuantifier::binary_cardinality(
        q.base(), [f = u->q](std::size_t, std::size_t k12) { return f(k12); }, desc);
  }
  return SemiFuzzyQuantifier(
      q.base(), q.arity() + 1,
      [q](std::span<const Bitset> y) {
        std::vector<Bitset> v(y.begin(), y.end() - 1);
        v.back() &= y.back();
        return q.eval_bits(v);
      },
      desc);
}

// (Q ◁ A)(Y1, ..., Yn−1) = Q(Y1, ..., Yn−1, A)
inline SemiFuzzyQuantifier crisp_argument_insertion(const SemiFuzzyQuantifier& q, const CrispSet& a) {
  if (q.arity() == 0) throw ArgumentError("argument insertion needs arity >= 1");
  require_same_base(q.base(), a.base());
  return SemiFuzzyQuantifier(
      q.base(), q.arity() - 1,
      [q, bits = a.bits()](std::span<const Bitset> y) {
        std::vector<Bitset> v(y.begin(), y.end());
        v.push_back(bits);
        return q.eval_bits(v);
      },
      q.description() + "<|{" + [&] {
        std::string s;
        for (const auto& id : a.members()) s += (s.empty() ? "" : ",") + id;
        return s;
      }() + "}");
}

}  // namespace qfm
