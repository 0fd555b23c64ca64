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

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "herzlab/cli.hpp"
#include "herzlab/common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mixed-norm Herz-type Besov and Triebel-Lizorkin toolkit", "herzlab"};
  app.set_version_flag("--version", std::string(herzlab::kVersion));
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  const std::map<std::string, std::string> about{
      {"norm", "Herz, Besov or Triebel-Lizorkin norm of a field"},
      {"decompose", "Littlewood-Paley block norms per level"},
      {"phitransform", "phi-transform coefficients and round-trip error"},
      {"seqnorm", "exact sequence-space norm of stored or random coefficients"},
      {"embed-sweep", "ensemble ratio sweep for a discrete embedding"},
      {"necessity", "dilation fit of the necessity exponent"},
      {"maximal-check", "vector-valued maximal inequality versus grid size"},
      {"ppn-check", "Plancherel-Polya-Nikolskij dilation fit"},
      {"hardy-check", "Hardy-type lq inequality against its constant"}};
  for (const std::string& name : herzlab::cli_commands()) {
    const auto it = about.find(name);
    CLI::App* sub = app.add_subcommand(name, it != about.end() ? it->second : name);
    sub->add_option("--config", config_path, "configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "report path (overrides [output] path)");
    sub->add_option("--seed", seed, "random seed (overrides [ensemble] seed)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  CLI::App* chosen = app.get_subcommands().front();
  std::optional<std::string> out;
  if (chosen->count("--out") > 0) out = out_path;
  std::optional<std::uint64_t> seed_override;
  if (chosen->count("--seed") > 0) seed_override = seed;
  return herzlab::run_config(chosen->get_name(), config_path, out, seed_override, std::cerr);
}
