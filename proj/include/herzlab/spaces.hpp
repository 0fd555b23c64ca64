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

#ifndef HERZLAB_SPACES_HPP
#define HERZLAB_SPACES_HPP

#include <span>

#include "herzlab/herz.hpp"
#include "herzlab/lpdecomp.hpp"

namespace herzlab {

enum class Family { B, F };

/// Herz-type Besov (B) or Triebel-Lizorkin (F) space.
struct SpaceParams {
  HerzParams herz;
  double s = 0.0;
  double beta = 2.0;
  Family family = Family::B;

  SpaceParams() = default;
  SpaceParams(HerzParams herz, double s, double beta, Family family);
  std::string describe() const;
};

double besov_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system);
double triebel_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system);
/// Dispatches on params.family.
double space_norm(const SampledField& field, const SpaceParams& params, const SpectralSystem& system);

struct RatioStats {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

/// Min and max of (norm via fj pair) / (norm via resolution of unity).
RatioStats norm_equivalence_report(std::span<const SampledField> ensemble, const SpaceParams& params,
                                   const SpectralSystem& fj_pair, const SpectralSystem& resolution);

/// Bound sum_k 2^(-k eps beta) to the power 1/beta over k >= 0.
double besov_shift_constant(double epsilon, double beta);

}  // namespace herzlab

#endif  // HERZLAB_SPACES_HPP
