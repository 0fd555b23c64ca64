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

#ifndef HERZLAB_REPORT_HPP
#define HERZLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace herzlab {

using ReportValue = std::variant<std::int64_t, double, std::string>;

/// One row of a report; field order is preserved.
struct Record {
  std::vector<std::pair<std::string, ReportValue>> fields;

  Record& add(std::string key, ReportValue value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Record& add(std::string key, int value) { return add(std::move(key), ReportValue(std::int64_t{value})); }
  Record& add(std::string key, std::size_t value) {
    return add(std::move(key), ReportValue(static_cast<std::int64_t>(value)));
  }
  Record& add(std::string key, std::int64_t value) { return add(std::move(key), ReportValue(value)); }
  Record& add(std::string key, double value) { return add(std::move(key), ReportValue(value)); }
  Record& add(std::string key, std::string value) { return add(std::move(key), ReportValue(std::move(value))); }
  Record& add(std::string key, const char* value) { return add(std::move(key), ReportValue(std::string(value))); }
};

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Record> records;
};

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(const std::string& name);

/// CSV body: header row then one line per record, 17 significant digits.
std::string render_csv(const std::vector<Record>& records);
/// JSON object with "meta" and "records" arrays.
std::string render_json(const Report& report);

/// Writes the report. CSV output puts the meta block in `<path>.meta.json`.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

}  // namespace herzlab

#endif  // HERZLAB_REPORT_HPP
