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

#include "herzlab/lpdecomp.hpp"

#include <cmath>
#include <string>

namespace herzlab {

namespace {

double smooth_ramp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double support_radius(SystemKind kind, int K) {
  if (kind == SystemKind::fj_pair) return std::ldexp(2.0, K);
  return K == 0 ? 1.5 : 3.0 * std::ldexp(1.0, K - 1);
}

}  // namespace

double transition(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = smooth_ramp(t);
  return a / (a + smooth_ramp(1.0 - t));
}

double theta_cutoff(double x) { return 1.0 - transition(2.0 * (std::abs(x) - 1.0)); }

double rho_cutoff(double x) { return 1.0 - transition(2.0 * std::abs(x) - 1.0); }

double fj_low_multiplier(double x) { return std::sqrt(rho_cutoff(0.5 * x)); }

double fj_band_multiplier(double x) {
  return std::sqrt(std::max(0.0, rho_cutoff(0.5 * x) - rho_cutoff(x)));
}

SpectralSystem::SpectralSystem(SystemKind kind, const GridShape& shape, int K)
    : kind_(kind), shape_(shape), K_(K) {
  require(shape.n >= 1, "spectral systems need n >= 1");
  require(K >= 0, "level count K must be nonnegative");
  require(support_radius(kind, K) <= shape.max_frequency(),
          "K too large for grid: top multiplier support exceeds pi G / L");
  const Eigen::ArrayXd radius = radial_frequencies(shape);
  tables_.reserve(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) {
    Eigen::ArrayXd table(radius.size());
    for (Index j = 0; j < radius.size(); ++j) table[j] = value(k, radius[j]);
    tables_.push_back(std::move(table));
  }
}

const Eigen::ArrayXd& SpectralSystem::multiplier(int k) const {
  require(k >= 0 && k <= K_, "level k outside 0..K");
  return tables_[static_cast<std::size_t>(k)];
}

double SpectralSystem::value(int k, double radius) const {
  if (kind_ == SystemKind::resolution_of_unity) {
    if (k == 0) return theta_cutoff(radius);
    return theta_cutoff(std::ldexp(radius, -k)) - theta_cutoff(std::ldexp(radius, 1 - k));
  }
  if (k == 0) return fj_low_multiplier(radius);
  return fj_band_multiplier(std::ldexp(radius, -k));
}

double SpectralSystem::exact_band() const { return std::ldexp(1.0, K_); }

SpectralSystem build_resolution(const GridShape& shape, int K) {
  return SpectralSystem(SystemKind::resolution_of_unity, shape, K);
}

SpectralSystem build_fj_pair(const GridShape& shape, int K) { return SpectralSystem(SystemKind::fj_pair, shape, K); }

namespace {

int max_level(SystemKind kind, const GridShape& shape) {
  int K = -1;
  while (support_radius(kind, K + 1) <= shape.max_frequency()) ++K;
  require(K >= 0, "grid too coarse for any spectral level");
  return K;
}

}  // namespace

int max_resolution_level(const GridShape& shape) { return max_level(SystemKind::resolution_of_unity, shape); }
int max_fj_level(const GridShape& shape) { return max_level(SystemKind::fj_pair, shape); }

SampledField apply_multiplier(const SampledField& spectrum, const Eigen::ArrayXd& multiplier) {
  require(spectrum.domain() == Domain::frequency, "apply_multiplier needs a spectrum");
  SampledField product(spectrum.shape(), spectrum.values() * multiplier.cast<Complex>(), Domain::frequency);
  return spectral_transform(product, Direction::inverse);
}

SampledField lp_block(const SampledField& field, int k, const SpectralSystem& system) {
  require(field.domain() == Domain::space, "lp_block needs a space-domain field");
  require(field.shape() == system.shape(), "field and spectral system live on different grids");
  return apply_multiplier(spectral_transform(field, Direction::forward), system.multiplier(k));
}

std::vector<SampledField> lp_blocks(const SampledField& field, const SpectralSystem& system) {
  require(field.domain() == Domain::space, "lp_blocks needs a space-domain field");
  require(field.shape() == system.shape(), "field and spectral system live on different grids");
  const SampledField spectrum = spectral_transform(field, Direction::forward);
  std::vector<SampledField> blocks;
  blocks.reserve(static_cast<std::size_t>(system.levels() + 1));
  for (int k = 0; k <= system.levels(); ++k) blocks.push_back(apply_multiplier(spectrum, system.multiplier(k)));
  return blocks;
}

WitnessDraw WitnessDraw::from_seed(int n, std::uint64_t seed) {
  Rng rng(seed);
  WitnessDraw d;
  d.phase = rng.uniform(0.0, 2.0 * kPi);
  for (int i = 0; i < n; ++i) d.shift[i] = rng.uniform(-1.0, 1.0);
  return d;
}

double witness_profile(double radius) {
  const double t = 4.0 * (radius - 0.75);
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double peak = smooth_ramp(0.5) * smooth_ramp(0.5);
  return smooth_ramp(t) * smooth_ramp(1.0 - t) / peak;
}

SampledField bandlimited_witness(const GridShape& shape, int N, std::uint64_t seed) {
  require(shape.n >= 1, "witness needs n >= 1");
  require(N >= 0, "witness level N must be nonnegative");
  require(std::ldexp(1.0, N) <= shape.max_frequency(), "witness level N unresolvable: 2^N > pi G / L");
  const WitnessDraw draw = WitnessDraw::from_seed(shape.n, seed);
  const double prefactor = std::pow(2.0 * kPi, 0.5 * shape.n) / std::pow(shape.L, shape.n) *
                           std::ldexp(1.0, -shape.n * N) * std::pow(static_cast<double>(shape.G), 0.5 * shape.n);
  SampledField spectrum(shape, Domain::frequency);
  bool any = false;
  for (Index flat = 0; flat < shape.size(); ++flat) {
    const auto j = shape.unflatten(flat);
    double r2 = 0.0;
    double phase = draw.phase;
    Index parity = 0;
    for (int i = 0; i < shape.n; ++i) {
      const double eta = std::ldexp(shape.frequency(j[i]), -N);
      r2 += eta * eta;
      phase += eta * draw.shift[i];
      parity += j[i] < shape.G / 2 ? j[i] : j[i] - shape.G;
    }
    const double b = witness_profile(std::sqrt(r2));
    if (b == 0.0) continue;
    any = true;
    const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
    spectrum[flat] = std::polar(prefactor * b * sign, phase);
  }
  require(any, "witness has no frequency bins in its shell: period L too small");
  return spectral_transform(spectrum, Direction::inverse);
}

SampledField random_bandlimited_field(const GridShape& shape, double radius, Rng& rng) {
  SampledField spectrum(shape, Domain::frequency);
  const Eigen::ArrayXd r = radial_frequencies(shape);
  for (Index j = 0; j < shape.size(); ++j) {
    const double re = rng.normal();
    const double im = rng.normal();
    if (r[j] <= radius) spectrum[j] = Complex(re, im);
  }
  return spectral_transform(spectrum, Direction::inverse);
}

}  // namespace herzlab
