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

// Output formatting: aligned text tables, RFC 4180 CSV, JSON reports.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfm/harness/matrix.hpp"
#include "qfm/harness/properties.hpp"
#include "qfm/ranking.hpp"

namespace qfm::io {

// Shortest representation that round-trips.
inline std::string format_exact(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

inline std::string format_fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) {
    row.resize(header_.size());
    rows_.push_back(std::move(row));
  }
  bool empty() const { return rows_.empty(); }

  std::string render() const {
    std::vector<std::size_t> w(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      w[c] = header_[c].size();
      for (const auto& r : rows_) w[c] = std::max(w[c], r[c].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        s += r[c];
        if (c + 1 < r.size()) s += std::string(w[c] - r[c].size() + 2, ' ');
      }
      out += s + "\n";
    };
    line(header_);
    std::vector<std::string> rule;
    for (auto n : w) rule.push_back(std::string(n, '-'));
    line(rule);
    for (const auto& r : rows_) line(r);
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// CRLF-terminated records.
class CsvDocument {
 public:
  explicit CsvDocument(std::vector<std::string> header) { add(std::move(header)); }
  void add(const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text_ += ',';
      text_ += csv_field(row[i]);
    }
    text_ += "\r\n";
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

inline Json to_json(const harness::Witness& w) {
  Json j;
  j["description"] = w.description;
  j["quantifier"] = w.quantifier;
  j["elements"] = w.elements;
  j["args"] = w.args;
  j["expected"] = w.expected;
  j["actual"] = w.actual;
  j["deviation"] = w.deviation;
  return j;
}

inline Json to_json(const harness::PropertyReport& r) {
  Json j;
  j["property"] = std::string(harness::to_string(r.property));
  j["table_label"] = std::string(harness::info(r.property).table_label);
  j["model"] = std::string(to_string(r.model.kind));
  j["expected"] = std::string(harness::to_string(harness::expected(r.property, r.model.kind)));
  j["verdict"] = std::string(harness::to_string(r.verdict));
  j["conformance"] = std::string(harness::to_string(harness::conformance(r)));
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_deviation"] = r.max_deviation;
  if (r.unary_part_holds) j["unary_part_holds"] = *r.unary_part_holds;
  j["anomalies"] = r.anomalies;
  if (!r.note.empty()) j["note"] = r.note;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const harness::ConformanceSummary& s) {
  Json j;
  j["agree"] = s.agree;
  j["disagree"] = s.disagree;
  j["inconclusive"] = s.inconclusive;
  j["not_applicable"] = s.not_applicable;
  j["total"] = s.total();
  return j;
}

inline Json to_json(const RankingResult& r) {
  Json j;
  j["model"] = std::string(to_string(r.model.kind));
  j["quantifier"] = r.quantifier;
  Json entries = Json::array();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    entries.push_back({{"rank", i + 1}, {"id", r.entries[i].id}, {"score", r.entries[i].score}});
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace qfm::io
