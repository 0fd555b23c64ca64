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

#ifndef HERZLAB_COMMON_HPP
#define HERZLAB_COMMON_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace herzlab {

using Complex = std::complex<double>;
using Index = Eigen::Index;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr const char* kVersion = "herzlab 0.1.0";

/// Raised on any violated precondition. The message names the condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

/// Reciprocal with 1/inf = 0.
inline double reciprocal(double p) { return p == kInf ? 0.0 : 1.0 / p; }

inline bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

/// Exact base-2 logarithm of a positive power of two (possibly fractional),
/// or throws.
int exact_log2(double v, const std::string& what);

/// Number of bits needed to represent u > 0.
inline int bit_length(std::uint64_t u) {
  int b = 0;
  while (u != 0) {
    ++b;
    u >>= 1;
  }
  return b;
}

/// Seeded generator with portable uniform and normal draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1].
  double uniform_open() { return 1.0 - uniform(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer uniform on [0, count).
  std::uint64_t below(std::uint64_t count);
  double normal();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Fixed 17-significant-digit decimal form of a double.
std::string format_double17(double v);

/// Parses a double written by format_double; accepts "inf".
double parse_double(const std::string& text);

}  // namespace herzlab

#endif  // HERZLAB_COMMON_HPP
