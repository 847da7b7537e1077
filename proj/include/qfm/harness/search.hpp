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

// Counterexample search shared by all property checks.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfm/evaluate.hpp"
#include "qfm/harness/generators.hpp"
#include "qfm/harness/properties.hpp"

namespace qfm::harness {

struct CheckOptions {
  std::size_t budget = 1000;  // random trials per (property, model)
  std::uint64_t seed = 42;
  double tol = 1e-9;
  double lipschitz_k = 2.0;
  double delta = 1e-4;
  EngineLimits limits{};
};

// x ≼_c y: x is at least as fuzzy as y.
inline bool fuzzier_or_equal_c(double x, double y, double tol) {
  return (y <= x + tol && x <= 0.5 + tol) || (0.5 - tol <= x && x <= y + tol);
}

class Search {
 public:
  Search(PropertyId id, QfmModel model, const CheckOptions& opt)
      : opt_(opt), rng_(derive_seed(opt.seed, to_string(id), model.name())) {
    report_.property = id;
    report_.model = model;
    report_.seed = opt.seed;
  }

  Rng& rng() { return rng_; }
  const QfmModel& model() const { return report_.model; }
  const CheckOptions& options() const { return opt_; }
  PropertyReport& report() { return report_; }
  bool found() const { return report_.witness.has_value(); }

  // Evaluator bound to this search's model, safe to copy into replays.
  std::function<double(const SemiFuzzyQuantifier&, const std::vector<FuzzySet>&)> engine() const {
    return [model = report_.model, limits = opt_.limits](const SemiFuzzyQuantifier& q,
                                                          const std::vector<FuzzySet>& args) {
      return evaluate(model, q, std::span<const FuzzySet>(args), limits);
    };
  }

  // `compute` yields (expected, actual); `violates` decides on them. Both
  // are kept in the witness so it can be replayed.
  bool probe(std::string description, const std::string& quantifier, const std::vector<FuzzySet>& args,
             std::function<std::pair<double, double>()> compute, std::function<bool(double, double)> violates) {
    const auto [e, a] = compute();
    const double dev = std::abs(e - a);
    if (!violates(e, a)) {
      if (std::isfinite(dev) && dev > report_.max_deviation) report_.max_deviation = dev;
      return false;
    }
    if (found()) return true;
    Witness w;
    w.description = std::move(description);
    w.quantifier = quantifier;
    if (!args.empty()) w.elements = args.front().base().elements();
    for (const auto& x : args) w.args.emplace_back(x.memberships().begin(), x.memberships().end());
    w.expected = e;
    w.actual = a;
    w.deviation = dev;
    w.replay = [compute, violates] {
      const auto [e2, a2] = compute();
      return violates(e2, a2);
    };
    report_.witness = std::move(w);
    return true;
  }

  bool probe_equal(std::string description, const std::string& quantifier, const std::vector<FuzzySet>& args,
                   std::function<std::pair<double, double>()> compute) {
    const double tol = opt_.tol;
    return probe(std::move(description), quantifier, args, std::move(compute),
                 [tol](double e, double a) { return std::abs(e - a) > tol; });
  }

  // Curated instances first, then up to `budget` random trials; stops at the
  // first violation.
  void run(const std::vector<std::function<void(Search&)>>& curated, const std::function<void(Search&)>& trial,
           std::optional<std::size_t> budget = std::nullopt) {
    for (const auto& c : curated) {
      if (found()) return;
      c(*this);
      ++report_.trials;
    }
    const std::size_t n = budget.value_or(opt_.budget);
    for (std::size_t i = 0; i < n && !found(); ++i) {
      trial(*this);
      ++report_.trials;
    }
  }

  // Verdict from the search outcome; a missing counterexample where one is
  // expected is inconclusive, never a pass.
  PropertyReport finish() {
    if (found()) {
      report_.verdict = Verdict::counterexample_found;
    } else {
      const Expected e = expected(report_.property, report_.model.kind);
      report_.verdict = (e == Expected::no || e == Expected::unary_only) ? Verdict::inconclusive
                                                                         : Verdict::holds_on_suite;
    }
    return report_;
  }

 private:
  CheckOptions opt_;
  Rng rng_;
  PropertyReport report_;
};

}  // namespace qfm::harness
