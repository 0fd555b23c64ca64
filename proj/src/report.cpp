// Copyright 2026 The herzlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "herzlab/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "herzlab/common.hpp"

namespace herzlab {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw Error("unknown report format '" + name + "' (expected csv or json)");
}

namespace {

std::string csv_cell(const ReportValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_double17(*d);
  const std::string& s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::ordered_json json_value(const ReportValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);
  }
  return std::get<std::string>(v);
}

nlohmann::ordered_json meta_json(const Report& report) {
  auto meta = nlohmann::ordered_json::array();
  for (const auto& [key, value] : report.meta) meta.push_back({{"key", key}, {"value", value}});
  return meta;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "unwritable report path '" + path + "'");
  out << text;
  out.close();
  require(static_cast<bool>(out), "failed writing report '" + path + "'");
}

}  // namespace

std::string render_csv(const std::vector<Record>& records) {
  require(!records.empty(), "emit_report needs at least one record");
  std::string text;
  const auto& head = records.front().fields;
  for (std::size_t i = 0; i < head.size(); ++i) text += (i ? "," : "") + csv_cell(head[i].first);
  text += '\n';
  for (const Record& r : records) {
    require(r.fields.size() == head.size(), "CSV records must share one column set");
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      require(r.fields[i].first == head[i].first, "CSV records must share one column set");
      text += (i ? "," : "") + csv_cell(r.fields[i].second);
    }
    text += '\n';
  }
  return text;
}

std::string render_json(const Report& report) {
  require(!report.records.empty(), "emit_report needs at least one record");
  nlohmann::ordered_json doc;
  doc["meta"] = meta_json(report);
  auto records = nlohmann::ordered_json::array();
  for (const Record& r : report.records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.fields) obj[key] = json_value(value);
    records.push_back(std::move(obj));
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  if (format == ReportFormat::json) {
    write_text(path, render_json(report));
    return;
  }
  write_text(path, render_csv(report.records));
  if (!report.meta.empty()) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json(report);
    write_text(path + ".meta.json", doc.dump(2) + "\n");
  }
}

}  // namespace herzlab
