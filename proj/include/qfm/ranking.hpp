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

// Multi-criteria ranking: each object is scored by Q̃(X^o) or Q̃(W, X^o).

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfm/error.hpp"
#include "qfm/evaluate.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/quantifier.hpp"

namespace qfm {

struct CriteriaMatrix {
  BaseSet criteria;
  std::vector<std::string> object_ids;
  std::vector<FuzzySet> fulfillments;  // parallel to object_ids
  std::optional<FuzzySet> weights;

  void validate() const {
    if (object_ids.size() != fulfillments.size()) throw ArgumentError("each object needs exactly one fulfillment set");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < object_ids.size(); ++i) {
      if (!seen.insert(object_ids[i]).second) throw ArgumentError("duplicate object id '" + object_ids[i] + "'");
      require_same_base(criteria, fulfillments[i].base());
    }
    if (weights) require_same_base(criteria, weights->base());
  }
};

struct RankedObject {
  std::string id;
  TruthValue score;
};

struct RankingResult {
  std::vector<RankedObject> entries;  // best first
  QfmModel model;
  std::string quantifier;
};

// Descending score; equal scores keep the declaration order of the objects.
inline RankingResult rank(const CriteriaMatrix& matrix, QfmModel model, const SemiFuzzyQuantifier& q,
                          const EngineLimits& limits = {}) {
  matrix.validate();
  if (q.arity() == 2 && !matrix.weights) throw ArgumentError("a binary ranking quantifier needs criteria weights");
  if (q.arity() == 1 && matrix.weights) throw ArgumentError("weights given but the ranking quantifier is unary");
  if (q.arity() != 1 && q.arity() != 2) throw ArgumentError("ranking quantifiers are unary or binary");
  require_same_base(q.base(), matrix.criteria);

  RankingResult out{{}, model, q.description()};
  for (std::size_t i = 0; i < matrix.object_ids.size(); ++i) {
    std::vector<FuzzySet> args;
    if (matrix.weights) args.push_back(*matrix.weights);
    args.push_back(matrix.fulfillments[i]);
    out.entries.push_back({matrix.object_ids[i], evaluate(model, q, std::span<const FuzzySet>(args), limits)});
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const RankedObject& a, const RankedObject& b) { return a.score > b.score; });
  return out;
}

}  // namespace qfm
