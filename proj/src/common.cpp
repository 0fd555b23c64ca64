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

#include "herzlab/common.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace herzlab {

int exact_log2(double v, const std::string& what) {
  require(std::isfinite(v) && v > 0.0, what + " must be a positive power of two");
  int e = 0;
  const double mantissa = std::frexp(v, &e);
  require(mantissa == 0.5, what + " must be a power of two");
  return e - 1;
}

std::uint64_t Rng::below(std::uint64_t count) {
  require(count > 0, "Rng::below requires a positive count");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % count;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % count;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform_open();
  const double v = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u));
  spare_ = radius * std::sin(2.0 * kPi * v);
  has_spare_ = true;
  return radius * std::cos(2.0 * kPi * v);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return kInf;
  if (text == "-inf") return -kInf;
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  require(res.ec == std::errc() && res.ptr == last, "malformed number '" + text + "'");
  return v;
}

}  // namespace herzlab
