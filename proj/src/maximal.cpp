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

#include "herzlab/maximal.hpp"

#include <cmath>

namespace herzlab {

EtaKernel::EtaKernel(double R_, double N_, int n_) : R(R_), N(N_), n(n_) {
  require(R > 0.0 && std::isfinite(R), "eta scale R must be positive");
  require(N > 0.0 && std::isfinite(N), "eta exponent N must be positive");
  require(n >= 1 && n <= 3, "eta dimension must be 1..3");
}

double EtaKernel::operator()(std::span<const double> x) const {
  double v = std::pow(R, n);
  for (double xi : x) v *= std::pow(1.0 + R * std::abs(xi), -N);
  return v;
}

SampledField axis_maximal(const SampledField& field, int axis) {
  const GridShape& shape = field.shape();
  require(field.domain() == Domain::space, "axis_maximal needs a space-domain field");
  require(axis >= 0 && axis < shape.n, "invalid axis for this field");
  const Index G = shape.G;
  const Index s = shape.stride(axis);
  const Index block = s * G;
  SampledField out(shape);
  std::vector<double> a(static_cast<std::size_t>(G));
  for (Index outer = 0; outer < shape.size(); outer += block) {
    for (Index inner = 0; inner < s; ++inner) {
      const Index base = outer + inner;
      for (Index j = 0; j < G; ++j) a[j] = std::abs(field[base + j * s]);
      for (Index c = 0; c < G; ++c) {
        double sum = a[c];
        double best = sum;
        for (Index r = 1; r < G / 2; ++r) {
          sum += a[(c - r + G) % G] + a[(c + r) % G];
          best = std::max(best, sum / static_cast<double>(2 * r + 1));
        }
        out[base + c * s] = best;
      }
    }
  }
  return out;
}

SampledField iterated_maximal(const SampledField& field, double t) {
  require(t > 0.0 && std::isfinite(t), "iterated_maximal needs t > 0");
  SampledField g(field.shape());
  g.values() = field.values().abs().pow(t).cast<Complex>();
  for (int axis = 0; axis < field.dim(); ++axis) g = axis_maximal(g, axis);
  g.values() = g.values().real().pow(1.0 / t).cast<Complex>();
  return g;
}

namespace {

void check_support_guard(const SampledField& f) {
  const GridShape& shape = f.shape();
  const double limit = shape.L / 8.0;
  for (Index flat = 0; flat < f.size(); ++flat) {
    if (f[flat] == Complex(0.0)) continue;
    const auto j = shape.unflatten(flat);
    for (int i = 0; i < shape.n; ++i) {
      const double x = shape.coordinate(j[i]);
      require(x >= -limit && x < limit, "support guard: family members must vanish outside [-L/8, L/8)^n");
    }
  }
}

SampledField pointwise_lbeta(const std::vector<SampledField>& parts, double beta) {
  SampledField out(parts.front().shape());
  std::vector<double> column(parts.size());
  for (Index j = 0; j < out.size(); ++j) {
    for (std::size_t i = 0; i < parts.size(); ++i) column[i] = std::abs(parts[i][j]);
    out[j] = lq_norm(column, beta);
  }
  return out;
}

}  // namespace

double fs_vector_check(std::span<const SampledField> family, const HerzParams& params, double beta, double t) {
  require(!family.empty(), "fs_vector_check needs a nonempty family");
  require(params.dim() == family.front().dim(), "Herz parameters and family differ in dimension");
  require(params.all_finite(), "hypothesis violated: p and q must be finite");
  for (int i = 0; i < params.dim(); ++i) {
    const double ip = reciprocal(params.p[i]);
    require(params.alpha[i] > -ip && params.alpha[i] < 1.0 - ip,
            "hypothesis violated: -1/p_i < alpha_i < 1 - 1/p_i");
  }
  require(t > 0.0 && t < std::min({beta, params.p_min(), params.q_min()}),
          "hypothesis violated: 0 < t < min(beta, p_-, q_-)");
  std::vector<SampledField> members;
  std::vector<SampledField> maximal;
  for (const SampledField& f : family) {
    require(f.shape() == family.front().shape(), "family members live on different grids");
    check_support_guard(f);
    members.push_back(f);
    maximal.push_back(iterated_maximal(f, t));
  }
  const double denominator = mixed_herz_norm(pointwise_lbeta(members, beta), params);
  require(denominator > 0.0, "fs_vector_check needs a nonzero family");
  return mixed_herz_norm(pointwise_lbeta(maximal, beta), params) / denominator;
}

SampledField periodic_convolution(const SampledField& a, const EtaKernel& kernel) {
  const GridShape& shape = a.shape();
  require(kernel.n == shape.n, "kernel and field differ in dimension");
  SampledField k(shape);
  std::array<double, 3> x{};
  for (Index flat = 0; flat < shape.size(); ++flat) {
    const auto j = shape.unflatten(flat);
    for (int i = 0; i < shape.n; ++i) {
      const Index off = j[i] < shape.G / 2 ? j[i] : j[i] - shape.G;
      x[i] = static_cast<double>(off) * shape.spacing();
    }
    k[flat] = kernel(std::span<const double>(x.data(), static_cast<std::size_t>(shape.n)));
  }
  const SampledField ka = spectral_transform(k, Direction::forward);
  SampledField fa = spectral_transform(a, Direction::forward);
  const double scale = std::pow(static_cast<double>(shape.G), 0.5 * shape.n) * std::pow(shape.spacing(), shape.n);
  fa.values() *= ka.values() * scale;
  return spectral_transform(fa, Direction::inverse);
}

double rtrick_check(const SampledField& g, int j, double r, double m) {
  const GridShape& shape = g.shape();
  require(r > 0.0 && std::isfinite(r), "r must be positive and finite");
  require(m > shape.n, "hypothesis violated: m > n");
  const SampledField spectrum = spectral_transform(g, Direction::forward);
  const Eigen::ArrayXd radius = radial_frequencies(shape);
  const double band = std::ldexp(2.0, j);
  double inside = 0.0;
  double outside = 0.0;
  for (Index i = 0; i < shape.size(); ++i) {
    (radius[i] <= band ? inside : outside) += std::norm(spectrum[i]);
  }
  require(outside <= 1e-24 * (inside + outside), "spectrum leakage outside |xi| <= 2^(j+1)");
  const double top = g.max_abs();
  require(top > 0.0, "rtrick_check needs a nonzero field");
  SampledField power(shape);
  power.values() = g.values().abs().pow(r).cast<Complex>();
  const SampledField conv = periodic_convolution(power, EtaKernel(std::ldexp(1.0, j), m / shape.n, shape.n));
  double margin = kInf;
  for (Index i = 0; i < shape.size(); ++i) {
    const double a = std::abs(g[i]);
    if (a <= 1e-9 * top) continue;
    margin = std::min(margin, std::pow(std::max(conv[i].real(), 0.0), 1.0 / r) / a);
  }
  return margin;
}

}  // namespace herzlab
