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

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "qfm/error.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/quantifier.hpp"

namespace qfm::detail {

// Breakpoints closer than this are merged.
inline constexpr double kCoalesce = 1e-12;

// Sorted breakpoints with near-duplicates merged. Every integrand in the
// engines is constant strictly between two consecutive breakpoints.
inline std::vector<double> coalesce(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > kCoalesce) out.push_back(x);
  }
  return out;
}

// Sums of widths and masses may leave [0,1] by a rounding error.
inline double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

inline void check_arguments(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
  if (args.size() != q.arity()) {
    throw ArgumentError("quantifier of arity " + std::to_string(q.arity()) + " given " +
                        std::to_string(args.size()) + " arguments");
  }
  for (const auto& x : args) require_same_base(q.base(), x.base());
}

}  // namespace qfm::detail
