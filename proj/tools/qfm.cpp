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

// qfm: evaluate quantified expressions, run the property matrix, sweep
// parameters, rank objects.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfm/error.hpp"
#include "qfm/harness/matrix.hpp"
#include "qfm/io/commands.hpp"
#include "qfm/io/problem.hpp"

namespace {

std::vector<qfm::ModelKind> parse_models(const std::vector<std::string>& names) {
  std::vector<qfm::ModelKind> out;
  for (const auto& n : names) {
    try {
      out.push_back(qfm::parse_model_kind(n));
    } catch (const qfm::ArgumentError& e) {
      throw qfm::ArgumentError(std::string("--models: ") + e.what());
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw qfm::io::InputError(path, "", "cannot open for writing");
  f << content;
  if (!f) throw qfm::io::InputError(path, "", "write failed");
}

struct Outputs {
  std::string out;
  std::string csv;
};

int emit(const qfm::io::CommandOutput& r, const Outputs& o) {
  std::cout << r.text;
  if (!o.out.empty()) write_file(o.out, r.report.dump(2) + "\n");
  if (!o.csv.empty()) write_file(o.csv, r.csv);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier fuzzification mechanisms: evaluation, adequacy checks and ranking"};
  app.require_subcommand(1);

  Outputs outs;
  std::vector<std::string> models;
  std::vector<std::string> properties;
  std::string file;
  std::string sweep_id, ranking_id, quantifier, model;
  qfm::harness::CheckOptions opt;

  auto add_outputs = [&](CLI::App* c, const char* csv_help) {
    c->add_option("--out", outs.out, "Write the JSON report to this path");
    c->add_option("--csv", outs.csv, csv_help);
  };
  auto add_models = [&](CLI::App* c) {
    c->add_option("--models", models, "Comma-separated models (FMD,FI,FA,M,MCX,FOWA); default all")
        ->delimiter(',');
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the expressions declared in a problem file");
  eval->add_option("file", file, "Problem file (JSON)")->required();
  add_models(eval);
  add_outputs(eval, "Write the result rows as CSV");

  auto* props = app.add_subcommand("properties", "Run the adequacy property matrix");
  props->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  props->add_option("--budget", opt.budget, "Random trials per (property, model)")->capture_default_str();
  props->add_option("--tol", opt.tol, "Comparison tolerance")->capture_default_str();
  props->add_option("--properties", properties, "Comma-separated property ids; default all")->delimiter(',');
  add_models(props);
  add_outputs(props, "Write one CSV row per (property, model)");

  auto* sweep = app.add_subcommand("sweep", "Vary one membership, knot or partition center over a grid");
  sweep->add_option("file", file, "Problem file (JSON)")->required();
  sweep->add_option("--sweep", sweep_id, "Sweep id; required when the file declares several");
  add_models(sweep);
  add_outputs(sweep, "Write the sweep payload as CSV");

  auto* rank = app.add_subcommand("rank", "Rank objects by quantified criteria fulfillment");
  rank->add_option("file", file, "Problem file (JSON)")->required();
  rank->add_option("--model", model, "Model; overrides the file");
  rank->add_option("--quantifier", quantifier, "Quantifier name; overrides the file");
  rank->add_option("--ranking", ranking_id, "Ranking id; default all");
  add_outputs(rank, "Write the rankings as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qfm::io::kExitInputError;
  }

  try {
    const auto model_filter = parse_models(models);
    if (*props) {
      std::vector<qfm::harness::PropertyId> ids;
      for (const auto& p : properties) {
        try {
          ids.push_back(qfm::harness::parse_property_id(p));
        } catch (const qfm::ArgumentError& e) {
          throw qfm::ArgumentError(std::string("--properties: ") + e.what());
        }
      }
      return emit(qfm::io::cmd_properties(opt, model_filter, ids), outs);
    }
    const auto problem = qfm::io::load_problem(file);
    if (*eval) return emit(qfm::io::cmd_eval(problem, model_filter), outs);
    if (*sweep) {
      return emit(qfm::io::cmd_sweep(problem, sweep_id.empty() ? std::nullopt : std::optional(sweep_id), model_filter),
                  outs);
    }
    std::optional<qfm::ModelKind> mk;
    if (!model.empty()) {
      try {
        mk = qfm::parse_model_kind(model);
      } catch (const qfm::ArgumentError& e) {
        throw qfm::ArgumentError(std::string("--model: ") + e.what());
      }
    }
    return emit(qfm::io::cmd_rank(problem, mk, quantifier.empty() ? std::nullopt : std::optional(quantifier),
                                  ranking_id.empty() ? std::nullopt : std::optional(ranking_id)),
                outs);
  } catch (const qfm::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return qfm::io::kExitCapacityError;
  } catch (const qfm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qfm::io::kExitInputError;
  }
}
