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

#include "herzlab/spaces.hpp"

#include <cmath>

namespace herzlab {

SpaceParams::SpaceParams(HerzParams herz_, double s_, double beta_, Family family_)
    : herz(std::move(herz_)), s(s_), beta(beta_), family(family_) {
  require(std::isfinite(s), "smoothness s must be finite");
  require(beta > 0.0 && !std::isnan(beta), "beta must lie in (0, inf]");
  if (family == Family::F) require(herz.all_finite(), "F-family requires finite p and q");
}

std::string SpaceParams::describe() const {
  return std::string(family == Family::B ? "B" : "F") + " s=" + format_double(s) +
         " beta=" + format_double(beta) + " " + herz.describe();
}

double besov_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system) {
  require(params.family == Family::B, "besov_norm needs family B");
  const auto blocks = lp_blocks(field, system);
  std::vector<double> terms;
  terms.reserve(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    terms.push_back(std::exp2(static_cast<double>(k) * params.s) * mixed_herz_norm(blocks[k], params.herz));
  }
  return lq_norm(terms, params.beta);
}

double triebel_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system) {
  require(params.family == Family::F, "triebel_norm needs family F");
  const auto blocks = lp_blocks(field, system);
  SampledField pointwise(field.shape());
  std::vector<double> column(blocks.size());
  for (Index j = 0; j < field.size(); ++j) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      column[k] = std::exp2(static_cast<double>(k) * params.s) * std::abs(blocks[k][j]);
    }
    pointwise[j] = lq_norm(column, params.beta);
  }
  return mixed_herz_norm(pointwise, params.herz);
}

double space_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system) {
  return params.family == Family::B ? besov_norm(field, params, system) : triebel_norm(field, params, system);
}

RatioStats norm_equivalence_report(std::span<const SampledField> ensemble, const SpaceParams& params,
                                   const SpectralSystem& fj_pair, const SpectralSystem& resolution) {
  require(!ensemble.empty(), "norm_equivalence_report needs a nonempty ensemble");
  require(fj_pair.kind() == SystemKind::fj_pair && resolution.kind() == SystemKind::resolution_of_unity,
          "expected an fj pair and a resolution of unity");
  require(fj_pair.levels() == resolution.levels(), "both systems must be built at the same K");
  RatioStats stats;
  for (const SampledField& f : ensemble) {
    const double a = space_norm(f, params, fj_pair);
    const double b = space_norm(f, params, resolution);
    require(a > 0.0 && b > 0.0, "zero-norm input in norm_equivalence_report");
    const double r = a / b;
    stats.min = stats.count == 0 ? r : std::min(stats.min, r);
    stats.max = stats.count == 0 ? r : std::max(stats.max, r);
    ++stats.count;
  }
  return stats;
}

double besov_shift_constant(double epsilon, double beta) {
  require(epsilon > 0.0, "epsilon must be positive");
  if (beta == kInf) return 1.0;
  return std::pow(1.0 / (1.0 - std::exp2(-epsilon * beta)), 1.0 / beta);
}

}  // namespace herzlab
