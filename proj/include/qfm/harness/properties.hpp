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

// Property identifiers, the reference behaviour table and report types.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfm/error.hpp"
#include "qfm/evaluate.hpp"

namespace qfm::harness {

enum class PropertyId {
  P1_correct_generalization,
  P2_quantitativity,
  P3_projection,
  P4_induced_propositional_logic,
  P5_external_negation,
  P6_internal_negation,
  P7_dualisation,
  P8_union_intersection,
  P9_standard_quantifiers,
  P10_monotonicity_args,
  P11_monotonicity_quantifiers,
  P12_crisp_insertion,
  P13_continuity_args,
  P14_continuity_quantifiers,
  P15_propagation_fuzziness_args,
  P15q_propagation_fuzziness_quantifiers,
  P16_fuzzy_argument_insertion,
  Z6_functional_application,
  C_aggregative,
  C_identity_averaging,
  C_ruspini_probabilistic,
  C_area_limit,
  C_discriminative_unary,
  C_discriminative_binary,
};

struct PropertyInfo {
  PropertyId id;
  std::string_view name;
  // Grid row label; numbering runs one ahead of the ids from external
  // negation onwards.
  std::string_view table_label;
  std::string_view summary;
};

inline constexpr std::array<PropertyInfo, 24> kProperties{{
    {PropertyId::P1_correct_generalization, "P1_correct_generalization", "P1", "F(Q) = Q on crisp arguments"},
    {PropertyId::P2_quantitativity, "P2_quantitativity", "P2", "element permutations leave F(Q) unchanged"},
    {PropertyId::P3_projection, "P3_projection", "P3", "F(pi_e)(X) = mu_X(e)"},
    {PropertyId::P4_induced_propositional_logic, "P4_induced_propositional_logic", "P4",
     "induced negation, t-norm, t-conorm and implication are admissible"},
    {PropertyId::P5_external_negation, "P5_external_negation", "P6", "F(not Q) = 1 - F(Q)"},
    {PropertyId::P6_internal_negation, "P6_internal_negation", "P7", "F(Q antonym)(X) = F(Q)(X1, .., not Xn)"},
    {PropertyId::P7_dualisation, "P7_dualisation", "P8", "F(Q dual)(X) = 1 - F(Q)(X1, .., not Xn)"},
    {PropertyId::P8_union_intersection, "P8_union_intersection", "P9",
     "F(Q join/meet) = F(Q) on induced union/intersection"},
    {PropertyId::P9_standard_quantifiers, "P9_standard_quantifiers", "P10",
     "exists, forall, some, all match their closed forms"},
    {PropertyId::P10_monotonicity_args, "P10_monotonicity_args", "P11", "monotone Q stays monotone in arguments"},
    {PropertyId::P11_monotonicity_quantifiers, "P11_monotonicity_quantifiers", "P12", "Q <= Q' implies F(Q) <= F(Q')"},
    {PropertyId::P12_crisp_insertion, "P12_crisp_insertion", "P13", "F(Q <| A) = F(Q) <| A for crisp A"},
    {PropertyId::P13_continuity_args, "P13_continuity_args", "P14", "Lipschitz spot check in arguments"},
    {PropertyId::P14_continuity_quantifiers, "P14_continuity_quantifiers", "P15",
     "Lipschitz spot check in the quantifier"},
    {PropertyId::P15_propagation_fuzziness_args, "P15_propagation_fuzziness_args", "P16",
     "fuzzier arguments give fuzzier results"},
    {PropertyId::P15q_propagation_fuzziness_quantifiers, "P15q_propagation_fuzziness_quantifiers", "P16",
     "fuzzier quantifiers give fuzzier results"},
    {PropertyId::P16_fuzzy_argument_insertion, "P16_fuzzy_argument_insertion", "P17",
     "fuzzy argument insertion (not executable here)"},
    {PropertyId::Z6_functional_application, "Z6_functional_application", "Z-6",
     "functional application (not executable here)"},
    {PropertyId::C_aggregative, "C_aggregative", "Aggregative behavior",
     "many low memberships accumulate in F(exists)"},
    {PropertyId::C_identity_averaging, "C_identity_averaging", "Identity Quantifier",
     "F(identity)(X) is the membership mean"},
    {PropertyId::C_ruspini_probabilistic, "C_ruspini_probabilistic", "Quantified Partitions",
     "results over a Ruspini partition sum to one"},
    {PropertyId::C_area_limit, "C_area_limit", "Quantified Partitions",
     "equispaced input weights each label by its area"},
    {PropertyId::C_discriminative_unary, "C_discriminative_unary", "Fine differentiation",
     "raising one membership strictly raises F(Q_h)(X)"},
    {PropertyId::C_discriminative_binary, "C_discriminative_binary", "Fine differentiation",
     "raising one weighted membership strictly raises F(Q_h)(W, X)"},
}};

inline const PropertyInfo& info(PropertyId id) {
  for (const auto& p : kProperties) {
    if (p.id == id) return p;
  }
  throw ArgumentError("unknown property");
}
inline std::string_view to_string(PropertyId id) { return info(id).name; }

inline PropertyId parse_property_id(std::string_view name) {
  for (const auto& p : kProperties) {
    if (p.name == name) return p.id;
  }
  throw ArgumentError("unknown property '" + std::string(name) + "'");
}

enum class Expected { yes, no, finite, unary_only, not_applicable };

inline std::string_view to_string(Expected e) {
  switch (e) {
    case Expected::yes: return "Y";
    case Expected::no: return "N";
    case Expected::finite: return "finite";
    case Expected::unary_only: return "unary";
    case Expected::not_applicable: return "NA";
  }
  return "?";
}

// Reference behaviour per (property, model).
inline Expected expected(PropertyId p, ModelKind k) {
  using E = Expected;
  using K = ModelKind;
  const bool fmd = k == K::FMD, fi = k == K::FI, fa = k == K::FA, m = k == K::M, mcx = k == K::MCX;
  switch (p) {
    case PropertyId::P6_internal_negation:
    case PropertyId::P7_dualisation: return fmd ? E::no : fi ? E::finite : E::yes;
    case PropertyId::P8_union_intersection: return fi ? E::no : E::yes;
    case PropertyId::P9_standard_quantifiers: return (fmd || fi) ? E::unary_only : E::yes;
    case PropertyId::P13_continuity_args: return (fmd || fi || fa) ? E::finite : E::yes;
    case PropertyId::P15_propagation_fuzziness_args:
    case PropertyId::P15q_propagation_fuzziness_quantifiers: return (m || mcx) ? E::yes : E::no;
    case PropertyId::P16_fuzzy_argument_insertion:
    case PropertyId::Z6_functional_application: return E::not_applicable;
    case PropertyId::C_aggregative: return fa ? E::yes : E::no;
    case PropertyId::C_identity_averaging:
    case PropertyId::C_discriminative_unary: return (m || mcx) ? E::no : E::yes;
    case PropertyId::C_ruspini_probabilistic: return (fmd || fi || fa) ? E::yes : E::no;
    case PropertyId::C_area_limit: return (fmd || fi) ? E::yes : E::not_applicable;
    case PropertyId::C_discriminative_binary: return (fi || fa) ? E::yes : E::no;
    default: return E::yes;
  }
}

enum class Verdict { holds_on_suite, counterexample_found, not_applicable, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_on_suite: return "holds_on_suite";
    case Verdict::counterexample_found: return "counterexample_found";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// A concrete violating instance. `replay` re-evaluates it from scratch and
// reports whether the violation still exceeds the tolerance.
struct Witness {
  std::string description;
  std::string quantifier;
  std::vector<std::string> elements;
  std::vector<std::vector<double>> args;
  double expected = 0.0;
  double actual = 0.0;
  double deviation = 0.0;
  std::function<bool()> replay;
};

struct PropertyReport {
  PropertyId property;
  QfmModel model;
  Verdict verdict = Verdict::holds_on_suite;
  std::optional<Witness> witness;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // Largest observed deviation on instances that did not violate.
  double max_deviation = 0.0;
  // Secondary assertions that failed (e.g. closed forms that should hold).
  std::vector<std::string> anomalies;
  // P9 for models coherent only on unary quantifiers.
  std::optional<bool> unary_part_holds;
  std::string note;
};

enum class Conformance { agree, disagree, inconclusive, not_applicable };

inline std::string_view to_string(Conformance c) {
  switch (c) {
    case Conformance::agree: return "agree";
    case Conformance::disagree: return "disagree";
    case Conformance::inconclusive: return "inconclusive";
    case Conformance::not_applicable: return "not_applicable";
  }
  return "?";
}

inline Conformance conformance(const PropertyReport& r) {
  const Expected e = expected(r.property, r.model.kind);
  if (!r.anomalies.empty()) return Conformance::disagree;
  switch (e) {
    case Expected::not_applicable:
      return r.verdict == Verdict::not_applicable ? Conformance::not_applicable : Conformance::disagree;
    case Expected::yes:
    case Expected::finite:
      return r.verdict == Verdict::holds_on_suite ? Conformance::agree : Conformance::disagree;
    case Expected::no:
      if (r.verdict == Verdict::counterexample_found) return Conformance::agree;
      return r.verdict == Verdict::inconclusive ? Conformance::inconclusive : Conformance::disagree;
    case Expected::unary_only:
      if (r.unary_part_holds == false) return Conformance::disagree;
      if (r.verdict == Verdict::counterexample_found) return Conformance::agree;
      return r.verdict == Verdict::inconclusive ? Conformance::inconclusive : Conformance::disagree;
  }
  return Conformance::disagree;
}

}  // namespace qfm::harness
