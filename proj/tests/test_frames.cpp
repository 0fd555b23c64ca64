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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "herzlab/frames.hpp"

using namespace herzlab;

namespace {

double level_max(const CoeffSeq& c, int k) {
  double m = 0.0;
  for (const auto& [key, v] : c.entries()) {
    if (key.level == k) m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace

TEST_CASE("coefficient container") {
  CoeffSeq c(2, 3);
  CHECK(c.empty());
  CHECK(c.max_occupied_level() == -1);
  c.set(2, {1, -1, 0}, Complex(1.0, 2.0));
  c.set(0, {0, 0, 0}, Complex(3.0));
  CHECK(c.size() == 2);
  CHECK(c.get(2, {1, -1, 0}) == Complex(1.0, 2.0));
  CHECK(c.get(1, {0, 0, 0}) == Complex(0.0));
  CHECK(c.max_occupied_level() == 2);
  c.set(0, {0, 0, 0}, Complex(0.0));
  CHECK(c.size() == 1);
  CoeffSeq d = c;
  d *= Complex(-1.0);
  c += d;
  CHECK(c.empty());
  CHECK_THROWS_AS(c.set(4, {0, 0, 0}, Complex(1.0)), Error);
}

TEST_CASE("analysis: zero field, frequency support, linearity") {
  const GridShape line(1, 32.0, 1024);
  const SpectralSystem sys = build_fj_pair(line, 4);
  CHECK(analyze(SampledField(line), sys).empty());
  CHECK(synthesize(CoeffSeq(1, 4), sys, line).max_abs() == 0.0);

  for (Index bin : {Index{3}, Index{14}, Index{40}, Index{90}}) {
    const double xi = line.frequency(bin);
    const SampledField e = make_field(1, 32.0, 1024, [&](auto x) { return std::exp(Complex(0.0, xi * x[0])); });
    const CoeffSeq c = analyze(e, sys);
    for (int k = 0; k <= 4; ++k) {
      const double expected = std::exp2(-0.5 * k) * sys.value(k, std::abs(xi));
      CHECK(level_max(c, k) == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
  }

  Rng rng(6);
  const SampledField f = random_bandlimited_field(line, 16.0, rng);
  const SampledField g = random_bandlimited_field(line, 16.0, rng);
  CoeffSeq sum = analyze(f, sys);
  sum += analyze(g, sys);
  const CoeffSeq joint = analyze(f + g, sys);
  double err = 0.0;
  for (const auto& [key, v] : joint.entries()) err = std::max(err, std::abs(v - sum.get(key.level, key.m)));
  CHECK(err <= 1e-12 * (f.max_abs() + g.max_abs()));

  const SpectralSystem res = build_resolution(line, 4);
  CHECK_THROWS_AS(analyze(f, res), Error);
}

TEST_CASE("synthesis of one coefficient matches the direct kernel sum") {
  const GridShape line(1, 16.0, 256);
  const SpectralSystem sys = build_fj_pair(line, 3);
  for (int k : {0, 1, 3}) {
    CoeffSeq c(1, 3);
    const std::int64_t m = 5;
    c.set(k, {m, 0, 0}, Complex(1.0));
    const SampledField psi = synthesize(c, sys, line);
    const double x0 = std::ldexp(static_cast<double>(m), -k);
    double err = 0.0;
    double peak = 0.0;
    Index arg = 0;
    for (Index j = 0; j < line.G; ++j) {
      Complex direct(0.0);
      for (Index b = 0; b < line.G; ++b) {
        const double xi = line.frequency(b);
        direct += sys.value(k, std::abs(xi)) * std::exp(Complex(0.0, xi * (line.coordinate(j) - x0)));
      }
      direct *= std::exp2(-0.5 * k) / line.L;
      err = std::max(err, std::abs(psi[j] - direct));
      if (std::abs(psi[j]) > peak) {
        peak = std::abs(psi[j]);
        arg = j;
      }
    }
    CHECK(err <= 1e-12 * peak);
    CHECK(line.coordinate(arg) == doctest::Approx(x0));
  }
  CoeffSeq over(1, 5);
  over.set(5, {0, 0, 0}, Complex(1.0));
  CHECK_THROWS_AS(synthesize(over, sys, line), Error);
}

TEST_CASE("round trip on witnesses and random band-limited fields") {
  const GridShape line(1, 64.0, 4096);
  const SpectralSystem sys = build_fj_pair(line, 4);
  for (int N = 0; N <= 4; ++N) CHECK(roundtrip_error(bandlimited_witness(line, N, 2), sys) <= 1e-8);
  Rng rng(10);
  for (int t = 0; t < 10; ++t) CHECK(roundtrip_error(random_bandlimited_field(line, 16.0, rng), sys) <= 1e-8);

  const GridShape plane(2, 16.0, 256);
  const SpectralSystem sys2 = build_fj_pair(plane, 3);
  for (int t = 0; t < 3; ++t) CHECK(roundtrip_error(random_bandlimited_field(plane, 8.0, rng), sys2) <= 1e-8);
  CHECK_THROWS_AS(roundtrip_error(SampledField(line), sys), Error);
}

TEST_CASE("coefficient file round trip is bit-exact") {
  const GridShape plane(2, 8.0, 64);
  const SpectralSystem sys = build_fj_pair(plane, 2);
  Rng rng(1);
  const CoeffSeq c = analyze(random_bandlimited_field(plane, 4.0, rng), sys);
  std::stringstream buffer;
  write_coefficients(buffer, c);
  const CoeffSeq back = read_coefficients(buffer);
  CHECK(back.dim() == 2);
  CHECK(back.levels() == 2);
  REQUIRE(back.size() == c.size());
  bool same = true;
  for (const auto& [key, v] : c.entries()) same = same && back.get(key.level, key.m) == v;
  CHECK(same);

  std::stringstream bad("herzlab-coeffs 1\nn 1\nK 2\nlattice centred\nentries 0\n");
  CHECK_THROWS_AS(read_coefficients(bad), Error);
  std::stringstream truncated("herzlab-coeffs 1\nn 1\nK 2\nlattice dyadic-corner\nentries 2\n0 1 1 0\n");
  CHECK_THROWS_AS(read_coefficients(truncated), Error);
}
