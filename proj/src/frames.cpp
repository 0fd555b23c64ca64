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

#include "herzlab/frames.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace herzlab {

CoeffSeq::CoeffSeq(int n, int K) : n_(n), K_(K) {
  require(n >= 1 && n <= 3, "coefficient dimension must be 1..3");
  require(K >= 0, "coefficient level range K must be nonnegative");
}

void CoeffSeq::set(int k, const LatticePoint& m, Complex v) {
  require(k >= 0 && k <= K_, "coefficient level outside 0..K");
  require(std::isfinite(v.real()) && std::isfinite(v.imag()), "coefficient must be finite");
  LatticeKey key{k, m};
  for (int i = n_; i < 3; ++i) key.m[i] = 0;
  if (v == Complex(0.0)) {
    entries_.erase(key);
  } else {
    entries_[key] = v;
  }
}

Complex CoeffSeq::get(int k, const LatticePoint& m) const {
  LatticeKey key{k, m};
  for (int i = n_; i < 3; ++i) key.m[i] = 0;
  auto it = entries_.find(key);
  return it == entries_.end() ? Complex(0.0) : it->second;
}

int CoeffSeq::max_occupied_level() const {
  int top = -1;
  for (const auto& [key, value] : entries_) top = std::max(top, key.level);
  return top;
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
  require(n_ == other.n_, "coefficient dimensions differ");
  K_ = std::max(K_, other.K_);
  for (const auto& [key, value] : other.entries_) set(key.level, key.m, get(key.level, key.m) + value);
  return *this;
}

CoeffSeq& CoeffSeq::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    entries_.clear();
  } else {
    for (auto& [key, value] : entries_) value *= c;
  }
  return *this;
}

Index lattice_refinement(const GridShape& shape, int k) {
  const double cells = std::ldexp(1.0, -k) / shape.spacing();
  require(cells >= 1.0 && cells == std::floor(cells), "lattice point off-grid: grid must refine the level-k lattice");
  const double half = 0.5 * shape.L * std::ldexp(1.0, k);
  require(half == std::floor(half), "window must hold an even number of level-k lattice cells");
  return static_cast<Index>(cells);
}

namespace {

/// Calls visit(flat grid index, lattice point) for every level-k lattice point.
template <typename Visit>
void for_each_lattice_point(const GridShape& shape, int k, Visit visit) {
  const Index M = lattice_refinement(shape, k);
  const Index per_axis = shape.G / M;
  Index count = 1;
  for (int i = 0; i < shape.n; ++i) count *= per_axis;
  for (Index c = 0; c < count; ++c) {
    Index rest = c;
    std::array<Index, 3> j{0, 0, 0};
    LatticePoint m{0, 0, 0};
    for (int i = 0; i < shape.n; ++i) {
      const Index a = rest % per_axis;
      rest /= per_axis;
      j[i] = a * M;
      m[i] = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(per_axis / 2);
    }
    visit(shape.flatten(j), m);
  }
}

}  // namespace

CoeffSeq analyze(const SampledField& field, const SpectralSystem& system) {
  require(system.kind() == SystemKind::fj_pair, "analyze needs an fj-pair system");
  require(field.shape() == system.shape(), "field and spectral system live on different grids");
  const GridShape& shape = field.shape();
  CoeffSeq coeffs(shape.n, system.levels());
  const auto blocks = lp_blocks(field, system);
  for (int k = 0; k <= system.levels(); ++k) {
    const double scale = std::ldexp(1.0, -k * shape.n);
    const double root = std::sqrt(scale);
    const SampledField& g = blocks[static_cast<std::size_t>(k)];
    for_each_lattice_point(shape, k, [&](Index flat, const LatticePoint& m) {
      const Complex v = root * g[flat];
      if (v != Complex(0.0)) coeffs.set(k, m, v);
    });
  }
  return coeffs;
}

SampledField synthesize(const CoeffSeq& coeffs, const SpectralSystem& system, const GridShape& shape) {
  require(system.kind() == SystemKind::fj_pair, "synthesize needs an fj-pair system");
  require(shape == system.shape(), "target grid differs from the spectral system grid");
  require(coeffs.dim() == shape.n, "coefficient and grid dimensions differ");
  require(coeffs.max_occupied_level() <= system.levels(), "coefficient level exceeds system K");
  SampledField total(shape, Domain::frequency);
  const double cell = std::pow(shape.spacing(), shape.n);
  for (int k = 0; k <= coeffs.max_occupied_level(); ++k) {
    SampledField comb(shape);
    bool any = false;
    const Index M = lattice_refinement(shape, k);
    const std::int64_t half = static_cast<std::int64_t>(shape.G / M / 2);
    const double weight = std::sqrt(std::ldexp(1.0, -k * shape.n)) / cell;
    auto lo = coeffs.entries().lower_bound(LatticeKey{k, {INT64_MIN, INT64_MIN, INT64_MIN}});
    for (auto it = lo; it != coeffs.entries().end() && it->first.level == k; ++it) {
      std::array<Index, 3> j{0, 0, 0};
      for (int i = 0; i < shape.n; ++i) {
        const std::int64_t a = it->first.m[i] + half;
        require(a >= 0 && a < 2 * half, "coefficient index outside the grid window");
        j[i] = static_cast<Index>(a) * M;
      }
      comb[shape.flatten(j)] += weight * it->second;
      any = true;
    }
    if (!any) continue;
    const SampledField spectrum = spectral_transform(comb, Direction::forward);
    total.values() += spectrum.values() * system.synthesis_multiplier(k).cast<Complex>();
  }
  return spectral_transform(total, Direction::inverse);
}

double roundtrip_error(const SampledField& field, const SpectralSystem& system) {
  const double norm = field.l2_norm();
  require(norm > 0.0, "roundtrip_error needs a nonzero field");
  SampledField back = synthesize(analyze(field, system), system, field.shape());
  back.values() -= field.values();
  return back.l2_norm() / norm;
}

void write_coefficients(std::ostream& out, const CoeffSeq& coeffs) {
  out << "herzlab-coeffs 1\n";
  out << "n " << coeffs.dim() << "\n";
  out << "K " << coeffs.levels() << "\n";
  out << "lattice dyadic-corner\n";
  out << "entries " << coeffs.size() << "\n";
  for (const auto& [key, value] : coeffs.entries()) {
    out << key.level;
    for (int i = 0; i < coeffs.dim(); ++i) out << ' ' << key.m[i];
    out << ' ' << format_double(value.real()) << ' ' << format_double(value.imag()) << '\n';
  }
  require(static_cast<bool>(out), "failed writing coefficient file");
}

CoeffSeq read_coefficients(std::istream& in) {
  std::string word;
  std::string version;
  in >> word >> version;
  require(word == "herzlab-coeffs" && version == "1", "coefficient file: bad magic line");
  int n = 0;
  int K = 0;
  std::size_t count = 0;
  std::string lattice;
  in >> word >> n;
  require(word == "n", "coefficient file: expected n");
  in >> word >> K;
  require(word == "K", "coefficient file: expected K");
  in >> word >> lattice;
  require(word == "lattice" && lattice == "dyadic-corner", "coefficient file: unknown lattice convention");
  in >> word >> count;
  require(word == "entries" && static_cast<bool>(in), "coefficient file: expected entry count");
  CoeffSeq coeffs(n, K);
  for (std::size_t e = 0; e < count; ++e) {
    int k = 0;
    LatticePoint m{0, 0, 0};
    std::string re;
    std::string im;
    in >> k;
    for (int i = 0; i < n; ++i) in >> m[i];
    in >> re >> im;
    require(static_cast<bool>(in), "coefficient file: truncated entry list");
    coeffs.set(k, m, Complex(parse_double(re), parse_double(im)));
  }
  return coeffs;
}

void save_coefficients(const std::string& path, const CoeffSeq& coeffs) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot open '" + path + "' for writing");
  write_coefficients(out, coeffs);
}

CoeffSeq load_coefficients(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  return read_coefficients(in);
}

}  // namespace herzlab
