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

#ifndef HERZLAB_GRID_HPP
#define HERZLAB_GRID_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "herzlab/common.hpp"

namespace herzlab {

enum class Domain { space, frequency };
enum class Direction { forward, inverse };

/// Periodic grid [-L/2, L/2)^n with G samples per axis.
///
/// Samples are stored flat with axis 0 varying fastest. A grid with n == 0
/// holds a single value and appears as the result of collapsing every axis.
struct GridShape {
  int n = 1;
  double L = 1.0;
  Index G = 2;

  GridShape() = default;
  GridShape(int n, double L, Index G);

  double spacing() const { return L / static_cast<double>(G); }
  Index size() const;
  Index stride(int axis) const;
  double coordinate(Index j) const { return -0.5 * L + static_cast<double>(j) * spacing(); }
  /// Angular frequency of bin j in FFT order (0, 1, ..., G/2-1, -G/2, ..., -1).
  double frequency(Index j) const;
  /// Largest resolvable radial frequency pi G / L.
  double max_frequency() const { return kPi * static_cast<double>(G) / L; }
  /// Same sample count on the period L / 2^N.
  GridShape dilated(int N) const;
  GridShape collapsed() const;
  /// Per-axis sample index of flat index `flat`.
  std::array<Index, 3> unflatten(Index flat) const;
  Index flatten(const std::array<Index, 3>& j) const;

  bool operator==(const GridShape& other) const {
    return n == other.n && L == other.L && G == other.G;
  }
};

/// Complex samples of a function, or of its spectrum, on a GridShape.
class SampledField {
 public:
  SampledField() = default;
  explicit SampledField(const GridShape& shape, Domain domain = Domain::space);
  SampledField(const GridShape& shape, Eigen::ArrayXcd values, Domain domain = Domain::space);

  const GridShape& shape() const { return shape_; }
  int dim() const { return shape_.n; }
  Domain domain() const { return domain_; }
  Index size() const { return values_.size(); }

  Eigen::ArrayXcd& values() { return values_; }
  const Eigen::ArrayXcd& values() const { return values_; }
  Complex& operator[](Index j) { return values_[j]; }
  const Complex& operator[](Index j) const { return values_[j]; }

  /// Value of a fully collapsed field.
  Complex scalar() const;
  double max_abs() const;
  /// Discrete L2 norm (sum |f|^2 h^n)^(1/2).
  double l2_norm() const;

  SampledField& operator*=(Complex c) {
    values_ *= c;
    return *this;
  }
  SampledField& operator+=(const SampledField& other);

 private:
  GridShape shape_{0, 1.0, 1};
  Eigen::ArrayXcd values_ = Eigen::ArrayXcd::Zero(1);
  Domain domain_ = Domain::space;
};

SampledField operator+(SampledField a, const SampledField& b);
SampledField operator*(Complex c, SampledField f);

/// Annulus and cube ranges resolvable on a dyadic grid.
struct DyadicGeometry {
  int k_min = 0;
  int k_max = 0;
  int v_max = 0;

  /// Requires L and h to be powers of two with h < L/2.
  static DyadicGeometry of(const GridShape& shape);
};

using Generator = std::function<Complex(std::span<const double>)>;

SampledField make_field(int n, double L, Index G, const Generator& generator);

/// Unitary DFT over sample indices, applied axis by axis.
///
/// Forward: F[k] = G^(-n/2) sum_j f[j] exp(-2 pi i j.k / G). Bins are in FFT
/// order; GridShape::frequency gives the angular frequency of each bin.
SampledField spectral_transform(const SampledField& field, Direction direction);

/// Radial frequency |xi| of every bin.
Eigen::ArrayXd radial_frequencies(const GridShape& shape);

/// Annulus index of the cell [x_j, x_j + h) along one axis, or
/// `kOriginCell` when the cell touches 0.
inline constexpr int kOriginCell = std::numeric_limits<int>::min();
int axis_annulus(const GridShape& shape, Index j);

SampledField annulus_mask_axis(const GridShape& shape, int axis, int k);
SampledField cube_indicator(const GridShape& shape, int v, const std::array<std::int64_t, 3>& m);

void write_field_snapshot(std::ostream& out, const SampledField& field);
SampledField read_field_snapshot(std::istream& in);
void save_field_snapshot(const std::string& path, const SampledField& field);
SampledField load_field_snapshot(const std::string& path);

}  // namespace herzlab

#endif  // HERZLAB_GRID_HPP
