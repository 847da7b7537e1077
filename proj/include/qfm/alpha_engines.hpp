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

// Alpha-cut engines: one shared integration level (F^MD) and one level per
// argument (F^I). Both integrate step functions exactly.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qfm/detail.hpp"
#include "qfm/error.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/sandwich.hpp"

namespace qfm {

// ∫₀¹ Q((X1)≥α, ..., (Xn)≥α) dα
inline TruthValue eval_fmd(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                           const EngineLimits& = {}) {
  detail::check_arguments(q, args);
  if (args.empty()) return q.eval_bits({});
  std::vector<double> levels{0.0, 1.0};
  for (const auto& x : args) levels.insert(levels.end(), x.memberships().begin(), x.memberships().end());
  levels = detail::coalesce(std::move(levels));

  std::vector<Bitset> cuts(args.size());
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const double mid = 0.5 * (levels[j] + levels[j + 1]);
    for (std::size_t i = 0; i < args.size(); ++i) cuts[i] = detail::cut_bits(args[i].memberships(), mid, false);
    sum += (levels[j + 1] - levels[j]) * q.eval_bits(cuts);
  }
  return detail::clamp_unit(sum);
}

// ∫₀¹…∫₀¹ Q((X1)≥α1, ..., (Xn)≥αn) dα1…dαn over the grid of per-argument
// breakpoint intervals.
inline TruthValue eval_fi(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                          const EngineLimits& limits = {}) {
  detail::check_arguments(q, args);
  const std::size_t n = args.size();
  if (n == 0) return q.eval_bits({});

  std::vector<std::vector<double>> widths(n);
  std::vector<std::vector<Bitset>> cuts(n);
  double cells = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> levels{0.0, 1.0};
    levels.insert(levels.end(), args[i].memberships().begin(), args[i].memberships().end());
    levels = detail::coalesce(std::move(levels));
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
      widths[i].push_back(levels[j + 1] - levels[j]);
      cuts[i].push_back(detail::cut_bits(args[i].memberships(), 0.5 * (levels[j] + levels[j + 1]), false));
    }
    cells *= static_cast<double>(widths[i].size());
  }
  if (cells > static_cast<double>(limits.fi_max_cells)) {
    throw CapacityError("F^I grid has " + std::to_string(static_cast<long long>(cells)) +
                        " cells, above the configured limit of " + std::to_string(limits.fi_max_cells));
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<Bitset> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = cuts[i][0];
  double sum = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t i = 0; i < n; ++i) w *= widths[i][idx[i]];
    sum += w * q.eval_bits(current);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < widths[i].size()) {
        current[i] = cuts[i][idx[i]];
        break;
      }
      idx[i] = 0;
      current[i] = cuts[i][0];
    }
    if (i == n) break;
  }
  return detail::clamp_unit(sum);
}

inline TruthValue eval_fmd(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_fmd(q, std::span<const FuzzySet>(args.begin(), args.size()));
}
inline TruthValue eval_fi(const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return eval_fi(q, std::span<const FuzzySet>(args.begin(), args.size()));
}

}  // namespace qfm
