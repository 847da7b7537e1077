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

// Subcommand implementations. Each returns the human table, the JSON
// report and, where meaningful, a CSV payload; nothing is written here.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qfm/error.hpp"
#include "qfm/evaluate.hpp"
#include "qfm/harness/matrix.hpp"
#include "qfm/io/problem.hpp"
#include "qfm/io/report.hpp"
#include "qfm/ranking.hpp"

namespace qfm::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacityError = 3;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
  Json report;
  std::string csv;
};

namespace detail {

inline Json report_header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

// Declared models narrowed by the command-line filter, in declaration order.
inline std::vector<ModelKind> select_models(const std::vector<ModelKind>& declared,
                                            const std::vector<ModelKind>& filter) {
  std::vector<ModelKind> base(declared.empty() ? std::vector<ModelKind>(kAllModels.begin(), kAllModels.end())
                                               : declared);
  if (filter.empty()) return base;
  std::vector<ModelKind> out;
  for (auto k : base) {
    if (std::find(filter.begin(), filter.end(), k) != filter.end()) out.push_back(k);
  }
  return out;
}

template <class F>
auto with_capacity_locus(const std::string& file, const std::string& locus, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const CapacityError& e) {
    throw CapacityError(file + ":" + locus + ": " + e.what());
  }
}

inline std::vector<FuzzySet> resolve_args(const Problem& p, const std::vector<std::string>& names) {
  std::vector<FuzzySet> out;
  for (const auto& n : names) out.push_back(*p.find_set(n));
  return out;
}

struct TargetValue {
  std::string label;
  double value;
};

// One value per quantifier, or one per label plus the sum for partitions.
inline std::vector<TargetValue> evaluate_target(const Problem& p, const TargetRef& t,
                                                const std::vector<FuzzySet>& args, ModelKind model,
                                                const EngineLimits& limits, const std::string& locus) {
  const Reader r(p.file);
  std::span<const FuzzySet> span(args);
  if (t.kind == TargetRef::Kind::quantifier) {
    const QuantifierDef& d = *p.find_quantifier(t.name);
    const auto q = r.at(d.locus, [&] { return d.build(p.base); });
    return {{t.name, with_capacity_locus(p.file, locus, [&] { return evaluate(QfmModel{model}, q, span, limits); })}};
  }
  const PartitionDef& d = *p.find_partition(t.name);
  const auto part = r.at(d.locus, [&] { return d.build(p.base); });
  std::vector<TargetValue> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < part.size(); ++i) {
    const double v = with_capacity_locus(p.file, locus, [&] {
      return evaluate(QfmModel{model}, part.quantifiers()[i], span, limits);
    });
    sum += v;
    out.push_back({t.name + "." + d.label_names[i], v});
  }
  out.push_back({t.name + ".sum", sum});
  return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace detail

inline CommandOutput cmd_eval(const Problem& p, const std::vector<ModelKind>& model_filter = {},
                              const EngineLimits& limits = {}) {
  CommandOutput out;
  TextTable table({"evaluation", "target", "args", "model", "value"});
  CsvDocument csv({"evaluation", "target", "args", "model", "value"});
  Json results = Json::array();
  for (const auto& e : p.evaluations) {
    const auto args = detail::resolve_args(p, e.args);
    for (auto k : detail::select_models(e.models, model_filter)) {
      for (const auto& tv : detail::evaluate_target(p, e.target, args, k, limits, e.locus)) {
        const std::string model(to_string(k));
        table.add({e.id, tv.label, detail::join(e.args, ","), model, format_fixed(tv.value)});
        csv.add({e.id, tv.label, detail::join(e.args, ","), model, format_exact(tv.value)});
        results.push_back({{"evaluation", e.id}, {"target", tv.label}, {"args", e.args}, {"model", model},
                           {"value", tv.value}});
      }
    }
  }
  out.text = table.render();
  out.csv = csv.str();
  out.report = detail::report_header("eval");
  out.report["results"] = std::move(results);
  return out;
}

namespace detail {

inline std::string observed_symbol(const harness::PropertyReport& r) {
  using harness::Verdict;
  switch (r.verdict) {
    case Verdict::holds_on_suite: return "Y";
    case Verdict::counterexample_found: return r.unary_part_holds.value_or(false) ? "unary" : "N";
    case Verdict::not_applicable: return "NA";
    case Verdict::inconclusive: return "?";
  }
  return "?";
}

}  // namespace detail

inline CommandOutput cmd_properties(const harness::CheckOptions& opt, const std::vector<ModelKind>& models = {},
                                    const std::vector<harness::PropertyId>& properties = {}) {
  using namespace harness;
  const auto result = run_full_matrix(opt, models, properties);
  CommandOutput out;

  std::vector<ModelKind> cols;
  for (auto k : kAllModels) {
    if (models.empty() || std::find(models.begin(), models.end(), k) != models.end()) cols.push_back(k);
  }
  std::vector<std::string> head{"property"};
  for (auto k : cols) head.emplace_back(to_string(k));
  TextTable grid(head);
  TextTable detail_table({"property", "model", "expected", "verdict", "conformance", "trials", "witness"});
  CsvDocument csv({"property", "table_label", "model", "expected", "verdict", "conformance", "trials",
                   "max_deviation", "witness"});
  for (std::size_t i = 0; i < result.reports.size();) {
    std::vector<std::string> row{std::string(to_string(result.reports[i].property))};
    const PropertyId id = result.reports[i].property;
    for (; i < result.reports.size() && result.reports[i].property == id; ++i) {
      const auto& r = result.reports[i];
      const auto c = conformance(r);
      std::string cell = detail::observed_symbol(r);
      if (c == Conformance::disagree) cell += " !";
      row.push_back(cell);
      const std::string w = r.witness ? r.witness->description : (r.note.empty() ? "" : r.note);
      detail_table.add({std::string(to_string(r.property)), std::string(to_string(r.model.kind)),
                        std::string(to_string(expected(r.property, r.model.kind))), std::string(to_string(r.verdict)),
                        std::string(to_string(c)), std::to_string(r.trials), w});
      csv.add({std::string(to_string(r.property)), std::string(info(r.property).table_label),
               std::string(to_string(r.model.kind)), std::string(to_string(expected(r.property, r.model.kind))),
               std::string(to_string(r.verdict)), std::string(to_string(c)), std::to_string(r.trials),
               format_exact(r.max_deviation), r.witness ? r.witness->description : ""});
    }
    grid.add(row);
  }
  const auto& s = result.summary;
  out.text = grid.render() + "\n" + detail_table.render() + "\nagree " + std::to_string(s.agree) + "  disagree " +
             std::to_string(s.disagree) + "  inconclusive " + std::to_string(s.inconclusive) + "  not_applicable " +
             std::to_string(s.not_applicable) + "\n";
  out.csv = csv.str();
  out.report = detail::report_header("properties");
  out.report["seed"] = opt.seed;
  out.report["budget"] = opt.budget;
  out.report["tol"] = opt.tol;
  out.report["summary"] = to_json(s);
  Json reports = Json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  out.report["reports"] = std::move(reports);
  out.exit_code = s.disagree > 0 ? kExitDisagreement : kExitOk;
  return out;
}

// Selects a sweep by id; with no id the file must declare exactly one.
inline const SweepDef& select_sweep(const Problem& p, const std::optional<std::string>& id) {
  if (id) {
    for (const auto& s : p.sweeps) if (s.id == *id) return s;
    throw InputError(p.file, "/sweeps", "no sweep with id '" + *id + "'");
  }
  if (p.sweeps.size() != 1) {
    throw InputError(p.file, "/sweeps", "file declares " + std::to_string(p.sweeps.size()) +
                                            " sweeps; choose one by id");
  }
  return p.sweeps.front();
}

inline CommandOutput cmd_sweep(const Problem& p, const std::optional<std::string>& sweep_id = std::nullopt,
                               const std::vector<ModelKind>& model_filter = {}, const EngineLimits& limits = {}) {
  const SweepDef& s = select_sweep(p, sweep_id);
  const detail::Reader r(p.file);
  const auto models = detail::select_models(s.models, model_filter);
  std::vector<std::string> head{s.axis.label()};
  for (auto k : models) head.emplace_back(to_string(k));
  TextTable table(head);
  CsvDocument csv(head);
  Json rows = Json::array();

  for (std::size_t g = 0; g < s.grid.size(); ++g) {
    const double x = s.grid[g];
    const std::string gat = detail::Reader::child(detail::Reader::child(s.locus, "grid"), g);
    Problem q = p;
    r.at(gat, [&] {
      switch (s.axis.kind) {
        case SweepAxis::Kind::membership:
          for (auto& [name, set] : q.fuzzy_sets) {
            if (name == s.axis.target) set = set.with_membership(s.axis.index, x);
          }
          break;
        case SweepAxis::Kind::knot:
          for (auto& d : q.quantifiers) {
            if (d.name == s.axis.target) d = d.with_parameter(s.axis.index, x);
          }
          break;
        case SweepAxis::Kind::partition_center:
          for (auto& d : q.partitions) {
            if (d.name == s.axis.target) d = d.with_center(s.axis.index, x);
          }
          break;
      }
      return 0;
    });
    const auto args = detail::resolve_args(q, s.args);
    std::vector<std::string> text_row{format_fixed(x)}, csv_row{format_exact(x)};
    Json jrow = Json::array({x});
    for (auto k : models) {
      const auto values = detail::evaluate_target(q, s.target, args, k, limits, gat);
      const double v = values.back().value;
      text_row.push_back(format_fixed(v));
      csv_row.push_back(format_exact(v));
      jrow.push_back(v);
    }
    table.add(text_row);
    csv.add(csv_row);
    rows.push_back(std::move(jrow));
  }
  CommandOutput out;
  out.text = table.render();
  out.csv = csv.str();
  out.report = detail::report_header("sweep");
  out.report["sweep"] = s.id;
  out.report["columns"] = head;
  out.report["rows"] = std::move(rows);
  return out;
}

// Every ranking in the file, or the one named; flags override the model and
// quantifier declared in the file.
inline CommandOutput cmd_rank(const Problem& p, const std::optional<ModelKind>& model = std::nullopt,
                              const std::optional<std::string>& quantifier = std::nullopt,
                              const std::optional<std::string>& ranking_id = std::nullopt,
                              const EngineLimits& limits = {}) {
  const detail::Reader r(p.file);
  CommandOutput out;
  CsvDocument csv({"ranking", "rank", "id", "score"});
  Json results = Json::array();
  bool matched = false;
  for (const auto& d : p.rankings) {
    if (ranking_id && d.id != *ranking_id) continue;
    matched = true;
    const auto mk = model ? model : d.model;
    if (!mk) r.fail(d.locus, "no model given for ranking '" + d.id + "'");
    const auto qn = quantifier ? quantifier : d.quantifier;
    if (!qn) r.fail(d.locus, "no quantifier given for ranking '" + d.id + "'");
    const QuantifierDef* qd = p.find_quantifier(*qn);
    if (!qd) r.fail(d.locus, "unknown quantifier '" + *qn + "'");
    const auto q = r.at(qd->locus, [&] { return qd->build(d.criteria); });
    CriteriaMatrix m{d.criteria, d.object_ids, d.fulfillments, d.weights};
    const auto res = r.at(d.locus, [&] {
      return detail::with_capacity_locus(p.file, d.locus, [&] { return rank(m, QfmModel{*mk}, q, limits); });
    });
    TextTable table({"rank", "id", "score"});
    for (std::size_t i = 0; i < res.entries.size(); ++i) {
      table.add({std::to_string(i + 1), res.entries[i].id, format_fixed(res.entries[i].score)});
      csv.add({d.id, std::to_string(i + 1), res.entries[i].id, format_exact(res.entries[i].score)});
    }
    if (!out.text.empty()) out.text += "\n";
    out.text += "ranking " + d.id + " (model " + std::string(to_string(*mk)) + ", quantifier " + *qn + ")\n" +
                table.render();
    Json j = to_json(res);
    j["ranking"] = d.id;
    results.push_back(std::move(j));
  }
  if (ranking_id && !matched) throw InputError(p.file, "/rankings", "no ranking with id '" + *ranking_id + "'");
  out.csv = csv.str();
  out.report = detail::report_header("rank");
  out.report["rankings"] = std::move(results);
  return out;
}

}  // namespace qfm::io
