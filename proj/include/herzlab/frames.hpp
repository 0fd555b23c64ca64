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

#ifndef HERZLAB_FRAMES_HPP
#define HERZLAB_FRAMES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "herzlab/lpdecomp.hpp"

namespace herzlab {

using LatticePoint = std::array<std::int64_t, 3>;

/// Level k and lattice index m; the cube is 2^-k([0,1)^n + m).
struct LatticeKey {
  int level = 0;
  LatticePoint m{0, 0, 0};
  auto operator<=>(const LatticeKey&) const = default;
};

/// Sparse coefficients lambda_{k,m}; absent entries are zero.
class CoeffSeq {
 public:
  CoeffSeq(int n, int K);

  int dim() const { return n_; }
  int levels() const { return K_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Stores v, or erases the entry when v == 0.
  void set(int k, const LatticePoint& m, Complex v);
  Complex get(int k, const LatticePoint& m) const;
  const std::map<LatticeKey, Complex>& entries() const { return entries_; }
  /// Largest occupied level, or -1 when empty.
  int max_occupied_level() const;

  CoeffSeq& operator+=(const CoeffSeq& other);
  CoeffSeq& operator*=(Complex c);

 private:
  int n_;
  int K_;
  std::map<LatticeKey, Complex> entries_;
};

/// Grid samples per level-k lattice cell along one axis.
Index lattice_refinement(const GridShape& shape, int k);

CoeffSeq analyze(const SampledField& field, const SpectralSystem& system);
SampledField synthesize(const CoeffSeq& coeffs, const SpectralSystem& system, const GridShape& shape);
/// Relative discrete L2 error of synthesize(analyze(f)).
double roundtrip_error(const SampledField& field, const SpectralSystem& system);

void write_coefficients(std::ostream& out, const CoeffSeq& coeffs);
CoeffSeq read_coefficients(std::istream& in);
void save_coefficients(const std::string& path, const CoeffSeq& coeffs);
CoeffSeq load_coefficients(const std::string& path);

}  // namespace herzlab

#endif  // HERZLAB_FRAMES_HPP
