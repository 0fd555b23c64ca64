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

#include "herzlab/grid.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <unsupported/Eigen/FFT>

namespace herzlab {

GridShape::GridShape(int n_, double L_, Index G_) : n(n_), L(L_), G(G_) {
  require(n >= 0 && n <= 3, "dimension n must satisfy 0 <= n <= 3");
  require(std::isfinite(L) && L > 0.0, "period L must be positive and finite");
  require(is_power_of_two(G), "G must be a power of two");
}

Index GridShape::size() const {
  Index s = 1;
  for (int i = 0; i < n; ++i) s *= G;
  return s;
}

Index GridShape::stride(int axis) const {
  Index s = 1;
  for (int i = 0; i < axis; ++i) s *= G;
  return s;
}

double GridShape::frequency(Index j) const {
  const Index signed_j = j < G / 2 ? j : j - G;
  return 2.0 * kPi / L * static_cast<double>(signed_j);
}

GridShape GridShape::dilated(int N) const { return GridShape(n, std::ldexp(L, -N), G); }

GridShape GridShape::collapsed() const {
  require(n > 0, "cannot collapse a zero-dimensional grid");
  return GridShape(n - 1, L, G);
}

std::array<Index, 3> GridShape::unflatten(Index flat) const {
  std::array<Index, 3> j{0, 0, 0};
  for (int i = 0; i < n; ++i) {
    j[i] = flat % G;
    flat /= G;
  }
  return j;
}

Index GridShape::flatten(const std::array<Index, 3>& j) const {
  Index flat = 0;
  for (int i = n - 1; i >= 0; --i) flat = flat * G + j[i];
  return flat;
}

SampledField::SampledField(const GridShape& shape, Domain domain)
    : shape_(shape), values_(Eigen::ArrayXcd::Zero(shape.size())), domain_(domain) {}

SampledField::SampledField(const GridShape& shape, Eigen::ArrayXcd values, Domain domain)
    : shape_(shape), values_(std::move(values)), domain_(domain) {
  require(values_.size() == shape_.size(), "value count must equal G^n");
}

Complex SampledField::scalar() const {
  require(values_.size() == 1, "scalar() requires a fully collapsed field");
  return values_[0];
}

double SampledField::max_abs() const { return values_.size() == 0 ? 0.0 : values_.abs().maxCoeff(); }

double SampledField::l2_norm() const {
  const double cell = std::pow(shape_.spacing(), shape_.n);
  return std::sqrt(values_.abs2().sum() * cell);
}

SampledField& SampledField::operator+=(const SampledField& other) {
  require(shape_ == other.shape_ && domain_ == other.domain_, "field shapes or domains differ");
  values_ += other.values_;
  return *this;
}

SampledField operator+(SampledField a, const SampledField& b) {
  a += b;
  return a;
}

SampledField operator*(Complex c, SampledField f) {
  f *= c;
  return f;
}

DyadicGeometry DyadicGeometry::of(const GridShape& shape) {
  const int log_h = exact_log2(shape.spacing(), "grid spacing h = L/G");
  const int log_half = exact_log2(shape.L / 2.0, "half period L/2");
  require(log_h < log_half, "grid needs h < L/2");
  DyadicGeometry g;
  g.k_min = log_h;
  g.k_max = log_half;
  g.v_max = -log_h;
  return g;
}

SampledField make_field(int n, double L, Index G, const Generator& generator) {
  require(n >= 1, "make_field requires n >= 1");
  const GridShape shape(n, L, G);
  SampledField field(shape);
  std::array<double, 3> x{};
  for (Index flat = 0; flat < shape.size(); ++flat) {
    const auto j = shape.unflatten(flat);
    for (int i = 0; i < n; ++i) x[i] = shape.coordinate(j[i]);
    const Complex v = generator(std::span<const double>(x.data(), static_cast<std::size_t>(n)));
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), "generator returned a non-finite value");
    field[flat] = v;
  }
  return field;
}

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine = [] {
    Eigen::FFT<double> e;
    e.SetFlag(Eigen::FFT<double>::Unscaled);
    return e;
  }();
  return engine;
}

}  // namespace

SampledField spectral_transform(const SampledField& field, Direction direction) {
  const Domain expected = direction == Direction::forward ? Domain::space : Domain::frequency;
  require(field.domain() == expected,
          direction == Direction::forward ? "forward transform needs a space-domain field"
                                          : "inverse transform needs a frequency-domain field");
  const GridShape& shape = field.shape();
  SampledField out(shape, field.values(),
                   direction == Direction::forward ? Domain::frequency : Domain::space);
  if (shape.n == 0) return out;
  const Index G = shape.G;
  const double scale = 1.0 / std::sqrt(static_cast<double>(G));
  std::vector<Complex> line(static_cast<std::size_t>(G));
  std::vector<Complex> result(static_cast<std::size_t>(G));
  auto& engine = fft_engine();
  Eigen::ArrayXcd& v = out.values();
  for (int axis = 0; axis < shape.n; ++axis) {
    const Index s = shape.stride(axis);
    const Index block = s * G;
    for (Index outer = 0; outer < shape.size(); outer += block) {
      for (Index inner = 0; inner < s; ++inner) {
        const Index base = outer + inner;
        for (Index j = 0; j < G; ++j) line[j] = v[base + j * s];
        if (direction == Direction::forward) {
          engine.fwd(result.data(), line.data(), G);
        } else {
          engine.inv(result.data(), line.data(), G);
        }
        for (Index j = 0; j < G; ++j) v[base + j * s] = result[j] * scale;
      }
    }
  }
  return out;
}

Eigen::ArrayXd radial_frequencies(const GridShape& shape) {
  Eigen::ArrayXd r(shape.size());
  for (Index flat = 0; flat < shape.size(); ++flat) {
    const auto j = shape.unflatten(flat);
    double sum = 0.0;
    for (int i = 0; i < shape.n; ++i) {
      const double xi = shape.frequency(j[i]);
      sum += xi * xi;
    }
    r[flat] = std::sqrt(sum);
  }
  return r;
}

int axis_annulus(const GridShape& shape, Index j) {
  const Index u = j - shape.G / 2;
  if (u == 0 || u == -1) return kOriginCell;
  const Index mirror = u > 0 ? u : -u - 1;
  const double h = shape.spacing();
  return bit_length(static_cast<std::uint64_t>(mirror)) + exact_log2(h, "grid spacing h = L/G");
}

SampledField annulus_mask_axis(const GridShape& shape, int axis, int k) {
  require(axis >= 0 && axis < shape.n, "axis out of range");
  const DyadicGeometry geo = DyadicGeometry::of(shape);
  require(k >= geo.k_min && k <= geo.k_max, "annulus index k outside the resolvable range");
  std::vector<bool> hit(static_cast<std::size_t>(shape.G));
  for (Index j = 0; j < shape.G; ++j) hit[j] = axis_annulus(shape, j) == k;
  SampledField mask(shape);
  for (Index flat = 0; flat < shape.size(); ++flat) {
    if (hit[shape.unflatten(flat)[axis]]) mask[flat] = 1.0;
  }
  return mask;
}

SampledField cube_indicator(const GridShape& shape, int v, const std::array<std::int64_t, 3>& m) {
  const DyadicGeometry geo = DyadicGeometry::of(shape);
  require(v <= geo.v_max, "cube level v exceeds v_max");
  const double side = std::ldexp(1.0, -v);
  const double h = shape.spacing();
  std::array<Index, 3> lo{0, 0, 0};
  std::array<Index, 3> hi{1, 1, 1};
  for (int i = 0; i < shape.n; ++i) {
    const double left = side * static_cast<double>(m[i]);
    const double a = (left + 0.5 * shape.L) / h;
    const double b = (left + side + 0.5 * shape.L) / h;
    require(b > 0.0 && a < static_cast<double>(shape.G), "cube lies entirely outside the window");
    lo[i] = static_cast<Index>(std::max(0.0, a));
    hi[i] = static_cast<Index>(std::min(static_cast<double>(shape.G), b));
  }
  SampledField field(shape);
  for (Index flat = 0; flat < shape.size(); ++flat) {
    const auto j = shape.unflatten(flat);
    bool inside = true;
    for (int i = 0; i < shape.n; ++i) inside = inside && j[i] >= lo[i] && j[i] < hi[i];
    if (inside) field[flat] = 1.0;
  }
  return field;
}

void write_field_snapshot(std::ostream& out, const SampledField& field) {
  const GridShape& s = field.shape();
  out << "herzlab-field 1\n";
  out << "n " << s.n << "\n";
  out << "L " << format_double(s.L) << "\n";
  out << "G " << s.G << "\n";
  out << "domain " << (field.domain() == Domain::space ? "space" : "frequency") << "\n";
  for (Index j = 0; j < field.size(); ++j) {
    out << format_double(field[j].real()) << ' ' << format_double(field[j].imag()) << '\n';
  }
  require(static_cast<bool>(out), "failed writing field snapshot");
}

namespace {

std::string expect_key(std::istream& in, const std::string& key) {
  std::string k;
  std::string value;
  in >> k >> value;
  require(static_cast<bool>(in) && k == key, "field snapshot: expected key '" + key + "'");
  return value;
}

}  // namespace

SampledField read_field_snapshot(std::istream& in) {
  std::string magic;
  std::string version;
  in >> magic >> version;
  require(magic == "herzlab-field" && version == "1", "field snapshot: bad magic line");
  const int n = std::stoi(expect_key(in, "n"));
  const double L = parse_double(expect_key(in, "L"));
  const Index G = std::stoll(expect_key(in, "G"));
  const std::string domain = expect_key(in, "domain");
  require(domain == "space" || domain == "frequency", "field snapshot: bad domain flag");
  const GridShape shape(n, L, G);
  SampledField field(shape, domain == "space" ? Domain::space : Domain::frequency);
  std::string re;
  std::string im;
  for (Index j = 0; j < field.size(); ++j) {
    in >> re >> im;
    require(static_cast<bool>(in), "field snapshot: truncated value list");
    field[j] = Complex(parse_double(re), parse_double(im));
  }
  return field;
}

void save_field_snapshot(const std::string& path, const SampledField& field) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot open '" + path + "' for writing");
  write_field_snapshot(out, field);
}

SampledField load_field_snapshot(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  return read_field_snapshot(in);
}

}  // namespace herzlab
