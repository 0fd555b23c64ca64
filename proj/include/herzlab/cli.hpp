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

#ifndef HERZLAB_CLI_HPP
#define HERZLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "herzlab/report.hpp"

namespace herzlab {

/// Sectioned key-value configuration; keys are addressed as "section.key".
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text, const std::string& base_dir = ".");
  static ExperimentConfig load(const std::string& path);

  const std::string& text() const { return text_; }
  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key) const;
  long long integer(const std::string& key, long long fallback) const;
  /// Whitespace or comma separated numbers; one value is repeated n times.
  std::vector<double> numbers(const std::string& key, std::size_t n) const;
  std::vector<double> numbers(const std::string& key) const;
  bool flag(const std::string& key, bool fallback) const;
  /// Resolves a path relative to the config file.
  std::string path(const std::string& key) const;
  /// Keys never read so far.
  std::vector<std::string> unused() const;

 private:
  std::string text_;
  std::string base_dir_;
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> read_;
};

/// Parses "1/2", "-3", "0.25", "inf".
double parse_number(const std::string& text);

inline const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names = {"norm",          "decompose",   "phitransform",
                                                 "seqnorm",       "embed-sweep", "necessity",
                                                 "maximal-check", "ppn-check",   "hardy-check"};
  return names;
}

/// Runs one command and returns the report without writing it.
Report run_experiment(const std::string& command, const ExperimentConfig& config,
                      std::optional<std::uint64_t> seed);

/// Runs the command and writes the report to `out` or the configured
/// output path. Returns 0 on success; otherwise prints one diagnostic line to
/// `err` and returns 2.
int run_config(const std::string& command, const std::string& config_path, const std::optional<std::string>& out,
               std::optional<std::uint64_t> seed, std::ostream& err);

}  // namespace herzlab

#endif  // HERZLAB_CLI_HPP
