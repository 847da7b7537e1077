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

#include <array>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "qfm/alpha_engines.hpp"
#include "qfm/cut_engines.hpp"
#include "qfm/error.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/probabilistic_engine.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/sandwich.hpp"

namespace qfm {

enum class ModelKind { FMD, FI, FA, M, MCX, FOWA };

inline constexpr std::array<ModelKind, 6> kAllModels{ModelKind::FMD, ModelKind::FI, ModelKind::FA,
                                                     ModelKind::M,   ModelKind::MCX, ModelKind::FOWA};

inline std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::FMD: return "FMD";
    case ModelKind::FI: return "FI";
    case ModelKind::FA: return "FA";
    case ModelKind::M: return "M";
    case ModelKind::MCX: return "MCX";
    case ModelKind::FOWA: return "FOWA";
  }
  return "?";
}

inline ModelKind parse_model_kind(std::string_view name) {
  for (auto k : kAllModels) {
    if (to_string(k) == name) return k;
  }
  throw ArgumentError("unknown model '" + std::string(name) + "' (expected FMD, FI, FA, M, MCX or FOWA)");
}

// A QFM together with the fuzzy logic it induces.
struct QfmModel {
  ModelKind kind;

  InducedLogic induced() const { return kind == ModelKind::FA ? probabilistic_logic() : standard_logic(); }
  std::string_view name() const { return to_string(kind); }
  bool operator==(const QfmModel&) const = default;
};

inline TruthValue evaluate(const QfmModel& model, const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                           const EngineLimits& limits = {}) {
  switch (model.kind) {
    case ModelKind::FMD: return eval_fmd(q, args, limits);
    case ModelKind::FI: return eval_fi(q, args, limits);
    case ModelKind::FA: return eval_fa(q, args, limits);
    case ModelKind::M: return eval_m(q, args, limits);
    case ModelKind::MCX: return eval_mcx(q, args, limits);
    case ModelKind::FOWA: return eval_fowa(q, args, limits);
  }
  throw ArgumentError("unknown model");
}

inline TruthValue evaluate(const QfmModel& model, const SemiFuzzyQuantifier& q,
                           std::initializer_list<FuzzySet> args) {
  return evaluate(model, q, std::span<const FuzzySet>(args.begin(), args.size()));
}

inline TruthValue evaluate(ModelKind kind, const SemiFuzzyQuantifier& q, std::initializer_list<FuzzySet> args) {
  return evaluate(QfmModel{kind}, q, std::span<const FuzzySet>(args.begin(), args.size()));
}

// μ_Q(Σ μ_X(e) / |E|)
inline TruthValue zadeh_sigma_count(const SemiFuzzyQuantifier& q, const FuzzySet& x) {
  if (q.arity() != 1) throw ArgumentError("sigma-count needs a unary quantifier");
  const auto& spec = q.spec();
  if (!spec || spec->domain() != DomainKind::proportional) {
    throw ArgumentError("sigma-count needs a quantifier built from a proportional fuzzy number");
  }
  require_same_base(q.base(), x.base());
  return (*spec)(x.mean());
}

}  // namespace qfm
