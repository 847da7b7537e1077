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

// JSON problem files.
//
//   {
//     "schema_version": 1,
//     "elements": ["e1", ...],
//     "fuzzy_sets": {"X": [0.2, ...]},
//     "quantifiers": {"q": {"type": "trapezoid", "params": [...], "arity": 2, ...}},
//     "partitions": {"P": {"centers": [0, 0.5, 1]}},
//     "evaluations": [{"quantifier": "q", "args": ["X"]}],
//     "rankings": [{"id": "r", "objects": [{"id": "A", "memberships": [...]}]}],
//     "sweeps": [{"id": "s", "axis": {...}, "grid": [...], "quantifier": "q", "args": ["X"]}]
//   }

#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfm/error.hpp"
#include "qfm/evaluate.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/fuzzy_number.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/ruspini.hpp"

namespace qfm::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed problem file; what() starts with "<file>:<locus>: ", the locus
// being a JSON pointer or a line and column.
class InputError : public ArgumentError {
 public:
  InputError(const std::string& file, const std::string& locus, const std::string& message)
      : ArgumentError(file + (locus.empty() ? std::string() : ":" + locus) + ": " + message) {}
};

namespace detail {

inline std::string escape_pointer_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string file) : file_(std::move(file)) {}
  const std::string& file() const { return file_; }

  [[noreturn]] void fail(const std::string& at, const std::string& msg) const { throw InputError(file_, at, msg); }

  static std::string child(const std::string& at, const std::string& key) { return at + "/" + escape_pointer_token(key); }
  static std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

  const Json& member(const Json& obj, const std::string& key, const std::string& at) const {
    if (!obj.is_object()) fail(at, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(at, "missing key '" + key + "'");
    return *it;
  }
  const Json* optional_member(const Json& obj, const std::string& key, const std::string& at) const {
    if (!obj.is_object()) fail(at, "expected an object");
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }
  double number(const Json& j, const std::string& at) const {
    if (!j.is_number()) fail(at, "expected a number");
    return j.get<double>();
  }
  std::size_t count(const Json& j, const std::string& at) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(at, "expected a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
  }
  std::string string(const Json& j, const std::string& at) const {
    if (!j.is_string()) fail(at, "expected a string");
    return j.get<std::string>();
  }
  const Json& array(const Json& j, const std::string& at) const {
    if (!j.is_array()) fail(at, "expected an array");
    return j;
  }
  const Json& object(const Json& j, const std::string& at) const {
    if (!j.is_object()) fail(at, "expected an object");
    return j;
  }
  std::vector<double> numbers(const Json& j, const std::string& at) const {
    array(j, at);
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], child(at, i)));
    return out;
  }
  std::vector<std::string> strings(const Json& j, const std::string& at) const {
    array(j, at);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], child(at, i)));
    return out;
  }

  // Runs f, re-raising library argument errors with the given locus.
  template <class F>
  auto at(const std::string& locus, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const InputError&) {
      throw;
    } catch (const ArgumentError& e) {
      fail(locus, e.what());
    }
  }

 private:
  std::string file_;
};

}  // namespace detail

// Quantifier declaration, independent of the base it is later built on.
struct QuantifierDef {
  enum class Type { fuzzy_number, exists, forall, all, some, unary_table, binary_table };

  std::string name;
  Type type = Type::fuzzy_number;
  std::size_t arity = 1;
  std::optional<FuzzyNumberSpec> spec;
  std::vector<double> table;
  std::optional<double> empty_value;
  std::string locus;

  std::vector<double> parameters() const {
    if (spec) return spec->parameters();
    return table;
  }
  QuantifierDef with_parameter(std::size_t i, double v) const {
    auto out = *this;
    auto p = parameters();
    if (i >= p.size()) throw ArgumentError("quantifier '" + name + "' has no parameter " + std::to_string(i));
    p[i] = v;
    if (spec) out.spec = spec->with_parameters(p);
    else out.table = p;
    return out;
  }
  SemiFuzzyQuantifier build(const BaseSet& base) const {
    switch (type) {
      case Type::fuzzy_number:
        return make_from_fuzzy_number(*spec, arity, base, empty_value.value_or(1.0)).with_description(name);
      case Type::exists: return make_exists(base).with_description(name);
      case Type::forall: return make_forall(base).with_description(name);
      case Type::all: return make_all_binary(base).with_description(name);
      case Type::some: return make_some_binary(base).with_description(name);
      case Type::unary_table: return make_unary_cardinality(base, table, name);
      case Type::binary_table: return make_binary_cardinality(base, table, name);
    }
    throw ArgumentError("unknown quantifier type");
  }
};

struct PartitionDef {
  std::string name;
  std::size_t arity = 1;
  std::vector<std::string> label_names;
  std::vector<FuzzyNumberSpec> labels;
  std::optional<std::vector<double>> centers;  // triangular family, when declared that way
  std::optional<double> empty_value;
  std::string locus;

  PartitionDef with_center(std::size_t i, double v) const {
    if (!centers) throw ArgumentError("partition '" + name + "' is not declared by centers");
    if (i >= centers->size()) throw ArgumentError("partition '" + name + "' has no center " + std::to_string(i));
    auto out = *this;
    (*out.centers)[i] = v;
    out.labels = triangular_labels(*out.centers);
    return out;
  }
  RuspiniPartition build(const BaseSet& base) const {
    return make_ruspini_partition(labels, arity, base, empty_value);
  }
};

// An evaluation target: a quantifier or every label of a partition.
struct TargetRef {
  enum class Kind { quantifier, partition };
  Kind kind = Kind::quantifier;
  std::string name;
};

struct EvaluationDef {
  std::string id;
  TargetRef target;
  std::vector<std::string> args;
  std::vector<ModelKind> models;  // empty: all
  std::string locus;
};

struct RankingDef {
  RankingDef(std::string id_, BaseSet criteria_) : id(std::move(id_)), criteria(std::move(criteria_)) {}

  std::string id;
  BaseSet criteria;
  std::vector<std::string> object_ids;
  std::vector<FuzzySet> fulfillments;
  std::optional<FuzzySet> weights;
  std::optional<std::string> quantifier;
  std::optional<ModelKind> model;
  std::string locus;
};

struct SweepAxis {
  enum class Kind { membership, knot, partition_center };
  Kind kind = Kind::membership;
  std::string target;  // fuzzy set, quantifier or partition name
  std::size_t index = 0;  // element index, parameter index or center index
  std::string element;  // membership axes only

  std::string label() const {
    switch (kind) {
      case Kind::membership: return "mu(" + target + "," + element + ")";
      case Kind::knot: return "knot(" + target + "," + std::to_string(index) + ")";
      case Kind::partition_center: return "center(" + target + "," + std::to_string(index) + ")";
    }
    return "axis";
  }
};

struct SweepDef {
  std::string id;
  SweepAxis axis;
  std::vector<double> grid;
  TargetRef target;
  std::vector<std::string> args;
  std::vector<ModelKind> models;
  std::string locus;
};

struct Problem {
  Problem(std::string file_, BaseSet base_) : file(std::move(file_)), base(std::move(base_)) {}

  std::string file;
  BaseSet base;
  std::vector<std::pair<std::string, FuzzySet>> fuzzy_sets;
  std::vector<QuantifierDef> quantifiers;
  std::vector<PartitionDef> partitions;
  std::vector<EvaluationDef> evaluations;
  std::vector<RankingDef> rankings;
  std::vector<SweepDef> sweeps;

  const FuzzySet* find_set(const std::string& n) const {
    for (const auto& [k, v] : fuzzy_sets) if (k == n) return &v;
    return nullptr;
  }
  const QuantifierDef* find_quantifier(const std::string& n) const {
    for (const auto& q : quantifiers) if (q.name == n) return &q;
    return nullptr;
  }
  const PartitionDef* find_partition(const std::string& n) const {
    for (const auto& p : partitions) if (p.name == n) return &p;
    return nullptr;
  }
};

namespace detail {

inline DomainKind parse_domain(const Reader& r, const Json& j, const std::string& at, DomainKind fallback) {
  const Json* d = r.optional_member(j, "domain", at);
  if (!d) return fallback;
  const auto s = r.string(*d, Reader::child(at, "domain"));
  if (s == "absolute") return DomainKind::absolute;
  if (s == "proportional") return DomainKind::proportional;
  r.fail(Reader::child(at, "domain"), "domain must be 'absolute' or 'proportional'");
}

// "trapezoid" | "s_shape" | "identity" | "piecewise_linear"
inline std::optional<FuzzyNumberSpec> parse_fuzzy_number(const Reader& r, const Json& j, const std::string& type,
                                                         const std::string& at) {
  auto params = [&](std::size_t n) {
    const auto p = r.numbers(r.member(j, "params", at), Reader::child(at, "params"));
    if (p.size() != n) r.fail(Reader::child(at, "params"), "expected " + std::to_string(n) + " parameters");
    return p;
  };
  if (type == "trapezoid") {
    const auto p = params(4);
    const auto d = parse_domain(r, j, at, DomainKind::proportional);
    return r.at(at, [&] { return FuzzyNumberSpec::trapezoid(p[0], p[1], p[2], p[3], d); });
  }
  if (type == "s_shape") {
    const auto p = params(2);
    const auto d = parse_domain(r, j, at, DomainKind::proportional);
    return r.at(at, [&] { return FuzzyNumberSpec::s_shape(p[0], p[1], d); });
  }
  if (type == "identity") return FuzzyNumberSpec::identity(parse_domain(r, j, at, DomainKind::proportional));
  if (type == "piecewise_linear") {
    const std::string kat = Reader::child(at, "knots");
    const Json& ks = r.array(r.member(j, "knots", at), kat);
    std::vector<std::pair<double, double>> knots;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto xy = r.numbers(ks[i], Reader::child(kat, i));
      if (xy.size() != 2) r.fail(Reader::child(kat, i), "a knot is an [x, y] pair");
      knots.emplace_back(xy[0], xy[1]);
    }
    const auto d = parse_domain(r, j, at, DomainKind::proportional);
    return r.at(at, [&] { return FuzzyNumberSpec::piecewise_linear(knots, d); });
  }
  return std::nullopt;
}

inline QuantifierDef parse_quantifier(const Reader& r, const std::string& name, const Json& j, const std::string& at) {
  r.object(j, at);
  QuantifierDef q;
  q.name = name;
  q.locus = at;
  const auto type = r.string(r.member(j, "type", at), Reader::child(at, "type"));
  if (const Json* a = r.optional_member(j, "arity", at)) q.arity = r.count(*a, Reader::child(at, "arity"));
  if (const Json* e = r.optional_member(j, "empty_value", at)) {
    q.empty_value = r.number(*e, Reader::child(at, "empty_value"));
    if (!is_truth_value(*q.empty_value)) r.fail(Reader::child(at, "empty_value"), "must lie in [0,1]");
  }
  auto fixed_arity = [&](std::size_t n) {
    if (r.optional_member(j, "arity", at) && q.arity != n) {
      r.fail(Reader::child(at, "arity"), "type '" + type + "' has arity " + std::to_string(n));
    }
    q.arity = n;
  };
  using T = QuantifierDef::Type;
  if (auto spec = parse_fuzzy_number(r, j, type, at)) {
    q.type = T::fuzzy_number;
    q.spec = spec;
    if (q.arity != 1 && q.arity != 2) r.fail(Reader::child(at, "arity"), "fuzzy-number quantifiers are unary or binary");
  } else if (type == "exists") {
    q.type = T::exists;
    fixed_arity(1);
  } else if (type == "forall") {
    q.type = T::forall;
    fixed_arity(1);
  } else if (type == "all") {
    q.type = T::all;
    fixed_arity(2);
  } else if (type == "some") {
    q.type = T::some;
    fixed_arity(2);
  } else if (type == "unary_table" || type == "binary_table") {
    q.type = type == "unary_table" ? T::unary_table : T::binary_table;
    fixed_arity(type == "unary_table" ? 1 : 2);
    q.table = r.numbers(r.member(j, "values", at), Reader::child(at, "values"));
  } else {
    r.fail(Reader::child(at, "type"), "unknown quantifier type '" + type + "'");
  }
  return q;
}

inline PartitionDef parse_partition(const Reader& r, const std::string& name, const Json& j, const std::string& at) {
  r.object(j, at);
  PartitionDef p;
  p.name = name;
  p.locus = at;
  if (const Json* a = r.optional_member(j, "arity", at)) {
    p.arity = r.count(*a, Reader::child(at, "arity"));
    if (p.arity != 1 && p.arity != 2) r.fail(Reader::child(at, "arity"), "partitions are unary or binary");
  }
  if (const Json* e = r.optional_member(j, "empty_value", at)) p.empty_value = r.number(*e, Reader::child(at, "empty_value"));
  const Json* c = r.optional_member(j, "centers", at);
  const Json* l = r.optional_member(j, "labels", at);
  if ((c != nullptr) == (l != nullptr)) r.fail(at, "declare exactly one of 'centers' or 'labels'");
  if (c) {
    p.centers = r.numbers(*c, Reader::child(at, "centers"));
    p.labels = r.at(Reader::child(at, "centers"), [&] { return triangular_labels(*p.centers); });
    for (std::size_t i = 0; i < p.labels.size(); ++i) p.label_names.push_back("L" + std::to_string(i));
  } else {
    const std::string lat = Reader::child(at, "labels");
    const Json& ls = r.array(*l, lat);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string iat = Reader::child(lat, i);
      r.object(ls[i], iat);
      const auto type = r.string(r.member(ls[i], "type", iat), Reader::child(iat, "type"));
      auto spec = parse_fuzzy_number(r, ls[i], type, iat);
      if (!spec) r.fail(Reader::child(iat, "type"), "labels must be fuzzy numbers");
      p.labels.push_back(*spec);
      const Json* n = r.optional_member(ls[i], "name", iat);
      p.label_names.push_back(n ? r.string(*n, Reader::child(iat, "name")) : "L" + std::to_string(i));
    }
  }
  return p;
}

inline std::vector<ModelKind> parse_models(const Reader& r, const Json& j, const std::string& at) {
  std::vector<ModelKind> out;
  const auto names = r.strings(j, at);
  for (std::size_t i = 0; i < names.size(); ++i) {
    out.push_back(r.at(Reader::child(at, i), [&] { return parse_model_kind(names[i]); }));
  }
  return out;
}

// "quantifier": name | "partition": name
inline TargetRef parse_target(const Reader& r, const Json& j, const std::string& at) {
  const Json* q = r.optional_member(j, "quantifier", at);
  const Json* p = r.optional_member(j, "partition", at);
  if ((q != nullptr) == (p != nullptr)) r.fail(at, "declare exactly one of 'quantifier' or 'partition'");
  if (q) return {TargetRef::Kind::quantifier, r.string(*q, Reader::child(at, "quantifier"))};
  return {TargetRef::Kind::partition, r.string(*p, Reader::child(at, "partition"))};
}

inline FuzzySet parse_membership_array(const Reader& r, const BaseSet& base, const Json& j, const std::string& at) {
  auto mu = r.numbers(j, at);
  if (mu.size() != base.size()) {
    r.fail(at, "expected " + std::to_string(base.size()) + " memberships, got " + std::to_string(mu.size()));
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!is_truth_value(mu[i])) r.fail(Reader::child(at, i), "membership outside [0,1]");
  }
  return FuzzySet(base, std::move(mu));
}

// A membership array, or the name of a declared fuzzy set on the same base.
inline FuzzySet parse_set_ref(const Reader& r, const Problem& p, const BaseSet& base, const Json& j,
                              const std::string& at) {
  if (j.is_string()) {
    const auto n = j.get<std::string>();
    const FuzzySet* s = p.find_set(n);
    if (!s) r.fail(at, "unknown fuzzy set '" + n + "'");
    if (!(s->base() == base)) r.fail(at, "fuzzy set '" + n + "' is declared over a different base");
    return *s;
  }
  return parse_membership_array(r, base, j, at);
}

inline std::vector<double> parse_grid(const Reader& r, const Json& j, const std::string& at) {
  if (j.is_array()) return r.numbers(j, at);
  r.object(j, at);
  const double from = r.number(r.member(j, "from", at), Reader::child(at, "from"));
  const double to = r.number(r.member(j, "to", at), Reader::child(at, "to"));
  const std::size_t steps = r.count(r.member(j, "steps", at), Reader::child(at, "steps"));
  std::vector<double> g;
  for (std::size_t i = 0; i < steps; ++i) {
    g.push_back(steps == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return g;
}

// Checks that `target` exists and accepts `args`; built on the problem base.
inline void check_target(const Reader& r, const Problem& p, const TargetRef& t, const std::vector<std::string>& args,
                         const std::string& at) {
  std::size_t arity = 0;
  if (t.kind == TargetRef::Kind::quantifier) {
    const QuantifierDef* q = p.find_quantifier(t.name);
    if (!q) r.fail(Reader::child(at, "quantifier"), "unknown quantifier '" + t.name + "'");
    r.at(q->locus, [&] { return q->build(p.base); });
    arity = q->arity;
  } else {
    const PartitionDef* d = p.find_partition(t.name);
    if (!d) r.fail(Reader::child(at, "partition"), "unknown partition '" + t.name + "'");
    r.at(d->locus, [&] { return d->build(p.base); });
    arity = d->arity;
  }
  if (args.size() != arity) {
    r.fail(Reader::child(at, "args"), "target '" + t.name + "' takes " + std::to_string(arity) + " arguments");
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!p.find_set(args[i])) r.fail(Reader::child(Reader::child(at, "args"), i), "unknown fuzzy set '" + args[i] + "'");
  }
}

inline std::string optional_id(const Reader& r, const Json& j, const std::string& at, const std::string& fallback) {
  const Json* id = r.optional_member(j, "id", at);
  return id ? r.string(*id, Reader::child(at, "id")) : fallback;
}

inline std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline Problem parse_problem(const std::string& text, const std::string& file = "<input>") {
  using detail::Reader;
  Reader r(file);
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = detail::line_and_column(text, e.byte);
    throw InputError(file, "line " + std::to_string(line) + ", column " + std::to_string(col), "parse error");
  }
  if (!root.is_object()) r.fail("/", "expected an object");
  const Json& v = r.member(root, "schema_version", "");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) {
    r.fail("/schema_version", "unsupported schema version (expected 1)");
  }

  const auto elements = r.strings(r.member(root, "elements", ""), "/elements");
  Problem p(file, r.at("/elements", [&] { return BaseSet(elements); }));

  if (const Json* fs = r.optional_member(root, "fuzzy_sets", "")) {
    r.object(*fs, "/fuzzy_sets");
    for (const auto& [name, mu] : fs->items()) {
      const auto at = Reader::child("/fuzzy_sets", name);
      p.fuzzy_sets.emplace_back(name, detail::parse_membership_array(r, p.base, mu, at));
    }
  }
  if (const Json* qs = r.optional_member(root, "quantifiers", "")) {
    r.object(*qs, "/quantifiers");
    for (const auto& [name, q] : qs->items()) {
      p.quantifiers.push_back(detail::parse_quantifier(r, name, q, Reader::child("/quantifiers", name)));
    }
  }
  if (const Json* ps = r.optional_member(root, "partitions", "")) {
    r.object(*ps, "/partitions");
    for (const auto& [name, d] : ps->items()) {
      p.partitions.push_back(detail::parse_partition(r, name, d, Reader::child("/partitions", name)));
    }
  }

  if (const Json* es = r.optional_member(root, "evaluations", "")) {
    r.array(*es, "/evaluations");
    for (std::size_t i = 0; i < es->size(); ++i) {
      const auto at = Reader::child("/evaluations", i);
      const Json& e = r.object((*es)[i], at);
      EvaluationDef d;
      d.locus = at;
      d.id = detail::optional_id(r, e, at, "eval" + std::to_string(i));
      d.target = detail::parse_target(r, e, at);
      d.args = r.strings(r.member(e, "args", at), Reader::child(at, "args"));
      if (const Json* m = r.optional_member(e, "models", at)) d.models = detail::parse_models(r, *m, Reader::child(at, "models"));
      detail::check_target(r, p, d.target, d.args, at);
      p.evaluations.push_back(std::move(d));
    }
  }

  if (const Json* rs = r.optional_member(root, "rankings", "")) {
    r.array(*rs, "/rankings");
    for (std::size_t i = 0; i < rs->size(); ++i) {
      const auto at = Reader::child("/rankings", i);
      const Json& j = r.object((*rs)[i], at);
      BaseSet criteria = p.base;
      if (const Json* c = r.optional_member(j, "criteria", at)) {
        const auto names = r.strings(*c, Reader::child(at, "criteria"));
        criteria = r.at(Reader::child(at, "criteria"), [&] { return BaseSet(names); });
      }
      RankingDef d(detail::optional_id(r, j, at, "ranking" + std::to_string(i)), criteria);
      d.locus = at;
      const auto oat = Reader::child(at, "objects");
      const Json& objs = r.array(r.member(j, "objects", at), oat);
      for (std::size_t k = 0; k < objs.size(); ++k) {
        const auto kat = Reader::child(oat, k);
        r.object(objs[k], kat);
        const auto id = r.string(r.member(objs[k], "id", kat), Reader::child(kat, "id"));
        for (const auto& prev : d.object_ids) {
          if (prev == id) r.fail(Reader::child(kat, "id"), "duplicate object id '" + id + "'");
        }
        d.object_ids.push_back(id);
        d.fulfillments.push_back(detail::parse_set_ref(r, p, d.criteria, r.member(objs[k], "memberships", kat),
                                                       Reader::child(kat, "memberships")));
      }
      if (const Json* w = r.optional_member(j, "weights", at)) {
        d.weights = detail::parse_set_ref(r, p, d.criteria, *w, Reader::child(at, "weights"));
      }
      if (const Json* q = r.optional_member(j, "quantifier", at)) {
        d.quantifier = r.string(*q, Reader::child(at, "quantifier"));
        if (!p.find_quantifier(*d.quantifier)) {
          r.fail(Reader::child(at, "quantifier"), "unknown quantifier '" + *d.quantifier + "'");
        }
      }
      if (const Json* m = r.optional_member(j, "model", at)) {
        const auto name = r.string(*m, Reader::child(at, "model"));
        d.model = r.at(Reader::child(at, "model"), [&] { return parse_model_kind(name); });
      }
      p.rankings.push_back(std::move(d));
    }
  }

  if (const Json* ss = r.optional_member(root, "sweeps", "")) {
    r.array(*ss, "/sweeps");
    for (std::size_t i = 0; i < ss->size(); ++i) {
      const auto at = Reader::child("/sweeps", i);
      const Json& j = r.object((*ss)[i], at);
      SweepDef d;
      d.locus = at;
      d.id = detail::optional_id(r, j, at, "sweep" + std::to_string(i));
      d.target = detail::parse_target(r, j, at);
      d.args = r.strings(r.member(j, "args", at), Reader::child(at, "args"));
      detail::check_target(r, p, d.target, d.args, at);
      if (const Json* m = r.optional_member(j, "models", at)) d.models = detail::parse_models(r, *m, Reader::child(at, "models"));
      d.grid = detail::parse_grid(r, r.member(j, "grid", at), Reader::child(at, "grid"));

      const auto aat = Reader::child(at, "axis");
      const Json& a = r.object(r.member(j, "axis", at), aat);
      const auto kind = r.string(r.member(a, "type", aat), Reader::child(aat, "type"));
      if (kind == "membership") {
        d.axis.kind = SweepAxis::Kind::membership;
        d.axis.target = r.string(r.member(a, "fuzzy_set", aat), Reader::child(aat, "fuzzy_set"));
        if (!p.find_set(d.axis.target)) r.fail(Reader::child(aat, "fuzzy_set"), "unknown fuzzy set '" + d.axis.target + "'");
        d.axis.element = r.string(r.member(a, "element", aat), Reader::child(aat, "element"));
        const auto idx = p.base.index_of(d.axis.element);
        if (!idx) r.fail(Reader::child(aat, "element"), "unknown element '" + d.axis.element + "'");
        d.axis.index = *idx;
        for (std::size_t g = 0; g < d.grid.size(); ++g) {
          if (!is_truth_value(d.grid[g])) r.fail(Reader::child(Reader::child(at, "grid"), g), "membership outside [0,1]");
        }
      } else if (kind == "knot") {
        d.axis.kind = SweepAxis::Kind::knot;
        d.axis.target = r.string(r.member(a, "quantifier", aat), Reader::child(aat, "quantifier"));
        const QuantifierDef* q = p.find_quantifier(d.axis.target);
        if (!q) r.fail(Reader::child(aat, "quantifier"), "unknown quantifier '" + d.axis.target + "'");
        d.axis.index = r.count(r.member(a, "index", aat), Reader::child(aat, "index"));
        if (d.axis.index >= q->parameters().size()) r.fail(Reader::child(aat, "index"), "parameter index out of range");
      } else if (kind == "partition_center") {
        d.axis.kind = SweepAxis::Kind::partition_center;
        d.axis.target = r.string(r.member(a, "partition", aat), Reader::child(aat, "partition"));
        const PartitionDef* q = p.find_partition(d.axis.target);
        if (!q) r.fail(Reader::child(aat, "partition"), "unknown partition '" + d.axis.target + "'");
        if (!q->centers) r.fail(Reader::child(aat, "partition"), "partition is not declared by centers");
        d.axis.index = r.count(r.member(a, "index", aat), Reader::child(aat, "index"));
        if (d.axis.index >= q->centers->size()) r.fail(Reader::child(aat, "index"), "center index out of range");
      } else {
        r.fail(Reader::child(aat, "type"), "axis type must be 'membership', 'knot' or 'partition_center'");
      }
      p.sweeps.push_back(std::move(d));
    }
  }
  return p;
}

inline Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

}  // namespace qfm::io
