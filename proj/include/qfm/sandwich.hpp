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

// Range of a semi-fuzzy quantifier over a product of crisp intervals
// {(Y1..Yn) : Li ⊆ Yi ⊆ Ui}. Shared by the three-valued-cut engines.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qfm/bitset.hpp"
#include "qfm/error.hpp"
#include "qfm/quantifier.hpp"

namespace qfm {

// Capacity knobs for the exact engines. Exceeding any of them raises
// CapacityError.
struct EngineLimits {
  std::size_t fi_max_cells = 10'000'000;
  std::size_t sandwich_max_evaluations = std::size_t{1} << 22;
  std::size_t fa_max_unary_size = 20;
  std::size_t fa_max_binary_size = 12;
  // Arity >= 3 reference enumeration: arity * m bits at most.
  std::size_t fa_max_total_bits = 24;
};

struct SandwichRange {
  double sup = 0.0;
  double inf = 1.0;
};

namespace detail {

struct RangeAccumulator {
  double sup = -std::numeric_limits<double>::infinity();
  double inf = std::numeric_limits<double>::infinity();
  void add(double v) {
    sup = std::max(sup, v);
    inf = std::min(inf, v);
  }
  SandwichRange result() const { return {sup, inf}; }
};

// Counts describing the reachable (|Y1|, |Y1 ∩ Y2|) pairs of a binary
// sandwich. `base1`/`base12` are the forced contributions; the remaining
// counts are elements whose options are {(1,0),(1,1)} (p), {(0,0),(1,0)}
// (s), {(0,0),(1,1)} (t) and all three (u).
struct BinaryProfile {
  std::size_t base1 = 0, base12 = 0, p = 0, s = 0, t = 0, u = 0;

  static BinaryProfile from(const Bitset& l1, const Bitset& u1, const Bitset& l2, const Bitset& u2) {
    BinaryProfile bp;
    for (std::size_t e = 0; e < l1.size(); ++e) {
      if (!u1.test(e)) continue;
      const bool forced1 = l1.test(e);
      const int a2 = l2.test(e) ? 1 : (u2.test(e) ? 2 : 0);  // 1 forced, 2 optional, 0 excluded
      if (forced1) {
        ++bp.base1;
        if (a2 == 1) ++bp.base12;
        if (a2 == 2) ++bp.p;
      } else {
        if (a2 == 0) ++bp.s;
        if (a2 == 1) ++bp.t;
        if (a2 == 2) ++bp.u;
      }
    }
    return bp;
  }

  bool reachable(std::size_t k1, std::size_t k12) const {
    if (k1 < base1 || k12 < base12) return false;
    const long d1 = static_cast<long>(k1 - base1), d12 = static_cast<long>(k12 - base12);
    const long P = static_cast<long>(p), S = static_cast<long>(s), T = static_cast<long>(t),
               U = static_cast<long>(u);
    // r counts elements landing in both sets from the t and u groups.
    const long r = std::min({d12, T + U, d1});
    if (r < std::max(0L, d12 - P)) return false;
    return d1 - r + std::max(0L, r - T) <= S + U;
  }
};

}  // namespace detail

// Reference path: enumerates every tuple in the sandwich.
inline SandwichRange sandwich_range_enumerate(const SemiFuzzyQuantifier& q, std::span<const Bitset> lower,
                                              std::span<const Bitset> upper, const EngineLimits& limits = {}) {
  const std::size_t n = q.arity();
  std::vector<Bitset> y(lower.begin(), lower.end());
  std::vector<std::pair<std::size_t, std::size_t>> free;  // (argument, element)
  for (std::size_t i = 0; i < n; ++i) {
    for (auto e : upper[i].minus(lower[i]).indices()) free.emplace_back(i, e);
  }
  if (free.size() >= 63 || (std::uint64_t{1} << free.size()) > limits.sandwich_max_evaluations) {
    throw CapacityError("sandwich enumeration needs 2^" + std::to_string(free.size()) +
                        " evaluations, above the configured limit");
  }
  detail::RangeAccumulator acc;
  acc.add(q.eval_bits(y));
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    // Gray code: flip the lowest set bit position of g.
    const auto bit = static_cast<std::size_t>(std::countr_zero(g));
    y[free[bit].first].flip(free[bit].second);
    acc.add(q.eval_bits(y));
  }
  return acc.result();
}

// sup and inf of Q over {(Y1..Yn) : lower_i ⊆ Y_i ⊆ upper_i}. Cardinality
// tags are answered from reachable cardinalities in O(m) (unary) and
// O(m^2) (binary); general quantifiers are enumerated.
inline SandwichRange sandwich_range(const SemiFuzzyQuantifier& q, std::span<const Bitset> lower,
                                    std::span<const Bitset> upper, const EngineLimits& limits = {}) {
  if (lower.size() != q.arity() || upper.size() != q.arity()) {
    throw ArgumentError("sandwich bounds do not match quantifier arity");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!lower[i].is_subset_of(upper[i])) throw ArgumentError("sandwich lower bound not inside upper bound");
  }
  if (auto* un = std::get_if<UnaryCardinality>(&q.structure())) {
    detail::RangeAccumulator acc;
    const std::size_t lo = lower[0].count(), hi = upper[0].count();
    for (std::size_t k = lo; k <= hi; ++k) acc.add(un->q(k));
    return acc.result();
  }
  if (auto* bin = std::get_if<BinaryCardinality>(&q.structure())) {
    const auto bp = detail::BinaryProfile::from(lower[0], upper[0], lower[1], upper[1]);
    detail::RangeAccumulator acc;
    const std::size_t k1_hi = bp.base1 + bp.s + bp.t + bp.u;
    for (std::size_t k1 = bp.base1; k1 <= k1_hi; ++k1) {
      const std::size_t k12_hi = std::min(k1, bp.base12 + bp.p + bp.t + bp.u);
      for (std::size_t k12 = bp.base12; k12 <= k12_hi; ++k12) {
        if (bp.reachable(k1, k12)) acc.add(bin->q(k1, k12));
      }
    }
    return acc.result();
  }
  return sandwich_range_enumerate(q, lower, upper, limits);
}

}  // namespace qfm
