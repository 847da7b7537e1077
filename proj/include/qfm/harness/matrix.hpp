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
#include <cstddef>
#include <optional>
#include <vector>

#include "qfm/evaluate.hpp"
#include "qfm/harness/criteria_checks.hpp"
#include "qfm/harness/framework_checks.hpp"
#include "qfm/harness/properties.hpp"
#include "qfm/harness/search.hpp"

namespace qfm::harness {

inline PropertyReport check_property(PropertyId id, QfmModel model, const CheckOptions& opt = {}) {
  switch (id) {
    case PropertyId::P1_correct_generalization: return check_correct_generalization(model, opt);
    case PropertyId::P2_quantitativity: return check_quantitativity(model, opt);
    case PropertyId::P3_projection: return check_projection(model, opt);
    case PropertyId::P4_induced_propositional_logic: return check_induced_logic(model, opt);
    case PropertyId::P5_external_negation: return check_external_negation(model, opt);
    case PropertyId::P6_internal_negation: return check_internal_negation(model, opt);
    case PropertyId::P7_dualisation: return check_dualisation(model, opt);
    case PropertyId::P8_union_intersection: return check_union_intersection(model, opt);
    case PropertyId::P9_standard_quantifiers: return check_standard_quantifiers(model, opt);
    case PropertyId::P10_monotonicity_args: return check_monotonicity_args(model, opt);
    case PropertyId::P11_monotonicity_quantifiers: return check_monotonicity_quantifiers(model, opt);
    case PropertyId::P12_crisp_insertion: return check_crisp_insertion(model, opt);
    case PropertyId::P13_continuity_args: return check_continuity_args(model, opt);
    case PropertyId::P14_continuity_quantifiers: return check_continuity_quantifiers(model, opt);
    case PropertyId::P15_propagation_fuzziness_args: return check_propagation_args(model, opt);
    case PropertyId::P15q_propagation_fuzziness_quantifiers: return check_propagation_quantifiers(model, opt);
    case PropertyId::P16_fuzzy_argument_insertion:
    case PropertyId::Z6_functional_application: return not_applicable_report(id, model, opt);
    case PropertyId::C_aggregative: return check_aggregative(model, opt);
    case PropertyId::C_identity_averaging: return check_identity_averaging(model, opt);
    case PropertyId::C_ruspini_probabilistic: return check_ruspini_probabilistic(model, opt);
    case PropertyId::C_area_limit: return check_area_limit_suite(model, opt);
    case PropertyId::C_discriminative_unary: return check_discriminative(model, 1, opt);
    case PropertyId::C_discriminative_binary: return check_discriminative(model, 2, opt);
  }
  throw ArgumentError("unknown property");
}

struct ConformanceSummary {
  std::size_t agree = 0, disagree = 0, inconclusive = 0, not_applicable = 0;
  std::size_t total() const { return agree + disagree + inconclusive + not_applicable; }
};

struct MatrixResult {
  std::vector<PropertyReport> reports;
  ConformanceSummary summary;
};

// Every (property, model) pair in declaration order; empty filters select all.
inline MatrixResult run_full_matrix(const CheckOptions& opt = {}, const std::vector<ModelKind>& models = {},
                                    const std::vector<PropertyId>& properties = {}) {
  MatrixResult out;
  for (const auto& p : kProperties) {
    if (!properties.empty() && std::find(properties.begin(), properties.end(), p.id) == properties.end()) continue;
    for (auto k : kAllModels) {
      if (!models.empty() && std::find(models.begin(), models.end(), k) == models.end()) continue;
      auto r = check_property(p.id, QfmModel{k}, opt);
      switch (conformance(r)) {
        case Conformance::agree: ++out.summary.agree; break;
        case Conformance::disagree: ++out.summary.disagree; break;
        case Conformance::inconclusive: ++out.summary.inconclusive; break;
        case Conformance::not_applicable: ++out.summary.not_applicable; break;
      }
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace qfm::harness
