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

#ifndef HERZLAB_LPDECOMP_HPP
#define HERZLAB_LPDECOMP_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "herzlab/grid.hpp"

namespace herzlab {

/// Smooth step: 0 for t <= 0, 1 for t >= 1.
double transition(double t);
/// 1 on |x| <= 1, 0 on |x| >= 3/2.
double theta_cutoff(double x);
/// 1 on |x| <= 1/2, 0 on |x| >= 1.
double rho_cutoff(double x);
/// Low-pass multiplier sqrt(rho(x/2)).
double fj_low_multiplier(double x);
/// Band-pass multiplier sqrt(rho(x/2) - rho(x)).
double fj_band_multiplier(double x);

enum class SystemKind { resolution_of_unity, fj_pair };

/// Radial Fourier multipliers for levels 0..K on one grid.
class SpectralSystem {
 public:
  SpectralSystem(SystemKind kind, const GridShape& shape, int K);

  SystemKind kind() const { return kind_; }
  const GridShape& shape() const { return shape_; }
  int levels() const { return K_; }
  /// Analysis multiplier at level k.
  const Eigen::ArrayXd& multiplier(int k) const;
  /// Synthesis multiplier at level k (equal to the analysis one here).
  const Eigen::ArrayXd& synthesis_multiplier(int k) const { return multiplier(k); }
  /// Radial value of the level-k multiplier.
  double value(int k, double radius) const;
  /// Largest radius on which the levels 0..K sum (or square-sum) to 1.
  double exact_band() const;

 private:
  SystemKind kind_;
  GridShape shape_;
  int K_;
  std::vector<Eigen::ArrayXd> tables_;
};

SpectralSystem build_resolution(const GridShape& shape, int K);
SpectralSystem build_fj_pair(const GridShape& shape, int K);
/// Largest K accepted by the builder on this grid.
int max_resolution_level(const GridShape& shape);
int max_fj_level(const GridShape& shape);

SampledField lp_block(const SampledField& field, int k, const SpectralSystem& system);
/// All blocks 0..K with one forward transform.
std::vector<SampledField> lp_blocks(const SampledField& field, const SpectralSystem& system);
/// Inverse transform of multiplier * spectrum.
SampledField apply_multiplier(const SampledField& spectrum, const Eigen::ArrayXd& multiplier);

/// Parameters of the witness omega drawn from a seed.
struct WitnessDraw {
  double phase = 0.0;
  std::array<double, 3> shift{0.0, 0.0, 0.0};
  static WitnessDraw from_seed(int n, std::uint64_t seed);
};

/// Smooth bump on (3/4, 1) peaking at 1.
double witness_profile(double radius);

/// Samples of omega(2^N x), periodized to the grid window.
///
/// The spectrum of omega is witness_profile(|xi|) exp(i(phase + xi.shift)).
SampledField bandlimited_witness(const GridShape& shape, int N, std::uint64_t seed);

/// Random field with spectrum supported in |xi| <= radius.
SampledField random_bandlimited_field(const GridShape& shape, double radius, Rng& rng);

}  // namespace herzlab

#endif  // HERZLAB_LPDECOMP_HPP
