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

#include "herzlab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace herzlab {

SeqSpaceParams::SeqSpaceParams(HerzParams herz_, double s_, double beta_, SeqFamily family_)
    : herz(std::move(herz_)), s(s_), beta(beta_), family(family_) {
  require(std::isfinite(s), "smoothness s must be finite");
  require(beta > 0.0 && !std::isnan(beta), "beta must lie in (0, inf]");
  if (family == SeqFamily::f) require(herz.all_finite(), "f-family requires finite p and q");
}

std::string SeqSpaceParams::describe() const {
  return std::string(family == SeqFamily::b ? "b" : "f") + " s=" + format_double(s) +
         " beta=" + format_double(beta) + " " + herz.describe();
}

namespace {

void add_cell_1d(AnnulusAccumulator& acc, int level, std::int64_t m, double value) {
  if (m == 0 || m == -1) {
    acc.add_origin(m == 0, level, value);
    return;
  }
  const auto u = static_cast<std::uint64_t>(m > 0 ? m : -m - 1);
  acc.add(bit_length(u) - level, value, std::ldexp(1.0, -level));
}

struct Strip {
  LatticePoint key{0, 0, 0};
  int level = 0;
  std::int64_t m0 = 0;
  double value = 0.0;
};

}  // namespace

double step_herz_norm(int n, std::vector<StepCell> cells, const HerzParams& params) {
  require(params.dim() == n, "Herz parameters and step field differ in dimension");
  for (const StepCell& c : cells) require(std::isfinite(c.value) && c.value >= 0.0, "step values must be finite and nonnegative");
  for (int axis = 0; axis < n; ++axis) {
    if (cells.empty()) return 0.0;
    AnnulusAccumulator acc(params.p[axis], params.alpha[axis], params.q[axis]);
    const int remaining = n - axis;
    if (remaining == 1) {
      for (const StepCell& c : cells) add_cell_1d(acc, c.level, c.m[0], c.value);
      return acc.norm();
    }
    int top = cells.front().level;
    for (const StepCell& c : cells) top = std::max(top, c.level);
    std::vector<Strip> strips;
    for (const StepCell& c : cells) {
      const int f = top - c.level;
      require(f * (remaining - 1) < 40, "step field levels too far apart to refine");
      const std::int64_t side = std::int64_t{1} << f;
      std::int64_t count = 1;
      for (int a = 1; a < remaining; ++a) count *= side;
      for (std::int64_t t = 0; t < count; ++t) {
        Strip s;
        std::int64_t rest = t;
        for (int a = 1; a < remaining; ++a) {
          s.key[a - 1] = c.m[a] * side + rest % side;
          rest /= side;
        }
        s.level = c.level;
        s.m0 = c.m[0];
        s.value = c.value;
        strips.push_back(s);
      }
    }
    std::sort(strips.begin(), strips.end(), [](const Strip& a, const Strip& b) {
      if (a.key != b.key) return a.key < b.key;
      if (a.level != b.level) return a.level < b.level;
      return a.m0 < b.m0;
    });
    std::vector<StepCell> next;
    for (std::size_t i = 0; i < strips.size();) {
      std::size_t j = i;
      acc.clear();
      while (j < strips.size() && strips[j].key == strips[i].key) {
        add_cell_1d(acc, strips[j].level, strips[j].m0, strips[j].value);
        ++j;
      }
      const double v = acc.norm();
      if (v > 0.0) next.push_back(StepCell{top, strips[i].key, v});
      i = j;
    }
    cells = std::move(next);
  }
  return 0.0;
}

namespace {

double level_weight(int k, const SeqSpaceParams& params) {
  return std::exp2(static_cast<double>(k) * (params.s + 0.5 * params.dim()));
}

struct Item {
  int level;
  LatticePoint m;
  double w;
};

void refine(int n, int level, const LatticePoint& m, double S, std::vector<Item> items, double beta,
            std::vector<StepCell>& out) {
  std::vector<Item> deeper;
  for (const Item& it : items) {
    if (it.level == level) {
      S = beta == kInf ? std::max(S, it.w) : S + it.w;
    } else {
      deeper.push_back(it);
    }
  }
  auto emit = [&](int lvl, const LatticePoint& cell) {
    if (S > 0.0) out.push_back(StepCell{lvl, cell, beta == kInf ? S : std::pow(S, 1.0 / beta)});
  };
  if (deeper.empty()) {
    emit(level, m);
    return;
  }
  const int children = 1 << n;
  std::vector<std::vector<Item>> parts(static_cast<std::size_t>(children));
  for (const Item& it : deeper) {
    int c = 0;
    for (int i = 0; i < n; ++i) {
      const std::int64_t bit = (it.m[i] >> (it.level - level - 1)) - 2 * m[i];
      c |= static_cast<int>(bit) << i;
    }
    parts[static_cast<std::size_t>(c)].push_back(it);
  }
  for (int c = 0; c < children; ++c) {
    LatticePoint child{0, 0, 0};
    for (int i = 0; i < n; ++i) child[i] = 2 * m[i] + ((c >> i) & 1);
    if (parts[static_cast<std::size_t>(c)].empty()) {
      emit(level + 1, child);
    } else {
      refine(n, level + 1, child, S, std::move(parts[static_cast<std::size_t>(c)]), beta, out);
    }
  }
}

}  // namespace

std::vector<StepCell> f_profile_cells(const CoeffSeq& coeffs, const SeqSpaceParams& params) {
  require(coeffs.dim() == params.dim(), "coefficients and parameters differ in dimension");
  const int n = coeffs.dim();
  std::map<LatticePoint, std::vector<Item>> roots;
  for (const auto& [key, value] : coeffs.entries()) {
    const double a = level_weight(key.level, params) * std::abs(value);
    const double w = params.beta == kInf ? a : std::pow(a, params.beta);
    LatticePoint root{0, 0, 0};
    for (int i = 0; i < n; ++i) root[i] = key.m[i] >> key.level;
    roots[root].push_back(Item{key.level, key.m, w});
  }
  std::vector<StepCell> cells;
  for (auto& [root, items] : roots) refine(n, 0, root, 0.0, std::move(items), params.beta, cells);
  return cells;
}

double b_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params) {
  require(params.family == SeqFamily::b, "b_norm needs family b");
  require(coeffs.dim() == params.dim(), "coefficients and parameters differ in dimension");
  std::map<int, std::vector<StepCell>> levels;
  for (const auto& [key, value] : coeffs.entries()) {
    levels[key.level].push_back(StepCell{key.level, key.m, std::abs(value)});
  }
  std::vector<double> terms;
  for (auto& [k, cells] : levels) {
    terms.push_back(level_weight(k, params) * step_herz_norm(coeffs.dim(), std::move(cells), params.herz));
  }
  return lq_norm(terms, params.beta);
}

double f_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params) {
  require(params.family == SeqFamily::f, "f_norm needs family f");
  return step_herz_norm(coeffs.dim(), f_profile_cells(coeffs, params), params.herz);
}

double seq_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params) {
  return params.family == SeqFamily::b ? b_norm(coeffs, params) : f_norm(coeffs, params);
}

int default_star_window(int n) { return n == 1 ? 64 : 16; }

CoeffSeq lambda_star(const CoeffSeq& coeffs, double r, double d, int window) {
  require(r > 0.0 && !std::isnan(r), "r must lie in (0, inf]");
  require(d > 0.0 && std::isfinite(d), "d must be positive and finite");
  require(window >= 0, "window must be nonnegative");
  require(!coeffs.empty(), "lambda_star: empty window (no occupied entries)");
  const int n = coeffs.dim();
  CoeffSeq out(n, coeffs.levels());
  std::map<int, std::vector<std::pair<LatticePoint, double>>> levels;
  for (const auto& [key, value] : coeffs.entries()) levels[key.level].emplace_back(key.m, std::abs(value));
  for (const auto& [k, occupied] : levels) {
    LatticePoint lo = occupied.front().first;
    LatticePoint hi = lo;
    double top = 0.0;
    for (const auto& [m, a] : occupied) {
      for (int i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], m[i]);
        hi[i] = std::max(hi[i], m[i]);
      }
      top = std::max(top, a);
    }
    std::int64_t count = 1;
    std::array<std::int64_t, 3> extent{1, 1, 1};
    for (int i = 0; i < n; ++i) {
      lo[i] -= window;
      hi[i] += window;
      extent[i] = hi[i] - lo[i] + 1;
      count *= extent[i];
    }
    for (std::int64_t c = 0; c < count; ++c) {
      LatticePoint m{0, 0, 0};
      std::int64_t rest = c;
      for (int i = 0; i < n; ++i) {
        m[i] = lo[i] + rest % extent[i];
        rest /= extent[i];
      }
      double acc = 0.0;
      double self = 0.0;
      for (const auto& [h, a] : occupied) {
        double dist2 = 0.0;
        for (int i = 0; i < n; ++i) {
          const double diff = static_cast<double>(h[i] - m[i]);
          dist2 += diff * diff;
        }
        if (dist2 == 0.0) self = a;
        const double weight = std::pow(1.0 + std::sqrt(dist2), -d);
        if (r == kInf) {
          acc = std::max(acc, a * weight);
        } else {
          acc += std::pow(a / top, r) * weight;
        }
      }
      const double value = r == kInf ? acc : top * std::pow(acc, 1.0 / r);
      out.set(k, m, std::max(self, value));
    }
  }
  return out;
}

RearrangedProfile::RearrangedProfile(std::vector<double> values, std::vector<double> widths)
    : values_(std::move(values)), widths_(std::move(widths)) {
  require(values_.size() == widths_.size(), "profile values and widths differ in length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(std::isfinite(values_[i]) && values_[i] > 0.0, "profile values must be positive and finite");
    require(std::isfinite(widths_[i]) && widths_[i] > 0.0, "profile widths must be positive and finite");
    if (i > 0) require(values_[i] < values_[i - 1], "profile values must strictly decrease");
  }
}

std::vector<double> RearrangedProfile::breakpoints() const {
  std::vector<double> t(widths_.size());
  std::partial_sum(widths_.begin(), widths_.end(), t.begin());
  return t;
}

double RearrangedProfile::total_measure() const { return std::accumulate(widths_.begin(), widths_.end(), 0.0); }

double RearrangedProfile::operator()(double t) const {
  require(t >= 0.0, "rearrangement argument must be nonnegative");
  double edge = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    edge += widths_[i];
    if (t < edge) return values_[i];
  }
  return 0.0;
}

double RearrangedProfile::lp_norm(double p) const {
  require(p > 0.0, "p must be positive");
  if (values_.empty()) return 0.0;
  if (p == kInf) return values_.front();
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) sum += std::pow(values_[i], p) * widths_[i];
  return std::pow(sum, 1.0 / p);
}

double RearrangedProfile::dyadic_norm(double p) const {
  require(p > 0.0 && std::isfinite(p), "p must be positive and finite");
  if (values_.empty()) return 0.0;
  // Largest j with 2^j below the first breakpoint; all smaller j see values_[0].
  int j = static_cast<int>(std::floor(std::log2(widths_.front())));
  while (std::ldexp(1.0, j) >= widths_.front()) --j;
  while (std::ldexp(1.0, j + 1) < widths_.front()) ++j;
  double sum = std::pow(values_.front(), p) * std::ldexp(1.0, j + 1);
  const double total = total_measure();
  for (int i = j + 1; std::ldexp(1.0, i) < total; ++i) {
    const double t = std::ldexp(1.0, i);
    sum += t * std::pow((*this)(t), p);
  }
  return std::pow(sum, 1.0 / p);
}

RearrangedProfile rearrange(std::span<const double> values, std::span<const double> measures) {
  require(values.size() == measures.size(), "values and measures differ in length");
  std::map<double, double, std::greater<>> levels;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]), "rearrange: non-finite value");
    require(std::isfinite(measures[i]) && measures[i] >= 0.0, "rearrange: measures must be finite and nonnegative");
    const double v = std::abs(values[i]);
    if (v > 0.0 && measures[i] > 0.0) levels[v] += measures[i];
  }
  std::vector<double> v;
  std::vector<double> w;
  for (const auto& [value, width] : levels) {
    v.push_back(value);
    w.push_back(width);
  }
  return RearrangedProfile(std::move(v), std::move(w));
}

RearrangedProfile rearrange(const SampledField& field) {
  require(field.domain() == Domain::space, "rearrange needs a space-domain field");
  std::vector<double> v(static_cast<std::size_t>(field.size()));
  for (Index j = 0; j < field.size(); ++j) {
    require(std::isfinite(field[j].real()) && std::isfinite(field[j].imag()), "rearrange: non-finite value");
    v[static_cast<std::size_t>(j)] = std::abs(field[j]);
  }
  const std::vector<double> w(v.size(), std::pow(field.shape().spacing(), field.dim()));
  return rearrange(v, w);
}

}  // namespace herzlab
