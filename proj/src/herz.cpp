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

#include "herzlab/herz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace herzlab {

HerzParams::HerzParams(Eigen::ArrayXd p_, Eigen::ArrayXd alpha_, Eigen::ArrayXd q_)
    : p(std::move(p_)), alpha(std::move(alpha_)), q(std::move(q_)) {
  require(p.size() >= 1 && p.size() <= 3, "Herz parameters need 1 to 3 axes");
  require(alpha.size() == p.size() && q.size() == p.size(), "p, alpha, q must have equal length");
  for (Index i = 0; i < p.size(); ++i) {
    require(p[i] > 0.0 && !std::isnan(p[i]), "p_i must lie in (0, inf]");
    require(q[i] > 0.0 && !std::isnan(q[i]), "q_i must lie in (0, inf]");
    require(std::isfinite(alpha[i]), "alpha_i must be finite");
    require(alpha[i] > -reciprocal(p[i]), "admissibility alpha_i > -1/p_i violated");
  }
}

HerzParams HerzParams::uniform(int n, double p, double alpha, double q) {
  return HerzParams(Eigen::ArrayXd::Constant(n, p), Eigen::ArrayXd::Constant(n, alpha),
                    Eigen::ArrayXd::Constant(n, q));
}

double HerzParams::inv_p_sum() const {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) s += reciprocal(p[i]);
  return s;
}

bool HerzParams::all_finite() const { return p.isFinite().all() && q.isFinite().all(); }

std::string HerzParams::describe() const {
  std::ostringstream out;
  auto list = [&](const Eigen::ArrayXd& a) {
    out << '(';
    for (Index i = 0; i < a.size(); ++i) out << (i ? "," : "") << format_double(a[i]);
    out << ')';
  };
  out << "p=";
  list(p);
  out << " alpha=";
  list(alpha);
  out << " q=";
  list(q);
  return out.str();
}

AnnulusAccumulator::AnnulusAccumulator(double p, double alpha, double q) : p_(p), alpha_(alpha), q_(q) {
  require(p > 0.0 && q > 0.0, "exponents must be positive");
  require(alpha > -reciprocal(p), "admissibility alpha > -1/p violated");
}

void AnnulusAccumulator::clear() {
  sums_.clear();
  offset_ = 0;
  has_origin_[0] = has_origin_[1] = false;
}

double AnnulusAccumulator::cell_power(double magnitude, double measure) const {
  if (p_ == kInf) return magnitude;
  if (p_ == 1.0) return magnitude * measure;
  if (p_ == 2.0) return magnitude * magnitude * measure;
  return std::pow(magnitude, p_) * measure;
}

void AnnulusAccumulator::merge(double& slot, double value) const {
  if (p_ == kInf) {
    slot = std::max(slot, value);
  } else {
    slot += value;
  }
}

void AnnulusAccumulator::add(int k, double magnitude, double measure) {
  if (magnitude == 0.0) return;
  if (sums_.empty()) {
    offset_ = k;
    sums_.push_back(0.0);
  } else if (k < offset_) {
    sums_.insert(sums_.begin(), static_cast<std::size_t>(offset_ - k), 0.0);
    offset_ = k;
  } else if (k >= offset_ + static_cast<int>(sums_.size())) {
    sums_.resize(static_cast<std::size_t>(k - offset_ + 1), 0.0);
  }
  merge(sums_[static_cast<std::size_t>(k - offset_)], cell_power(magnitude, measure));
}

void AnnulusAccumulator::add_origin(bool positive, int level, double magnitude) {
  if (magnitude == 0.0) return;
  const int side = positive ? 0 : 1;
  require(!has_origin_[side], "two cells claim the same side of the origin");
  has_origin_[side] = true;
  origin_level_[side] = level;
  origin_value_[side] = magnitude;
}

double lq_norm(const std::vector<double>& a, double q) {
  double top = 0.0;
  for (double v : a) top = std::max(top, v);
  if (top == 0.0 || q == kInf) return top;
  double sum = 0.0;
  for (double v : a) {
    if (v == 0.0) continue;
    const double r = v / top;
    sum += q == 1.0 ? r : (q == 2.0 ? r * r : std::pow(r, q));
  }
  return top * (q == 1.0 ? sum : std::pow(sum, 1.0 / q));
}

double AnnulusAccumulator::norm() const {
  const bool any_origin = has_origin_[0] || has_origin_[1];
  if (sums_.empty() && !any_origin) return 0.0;
  int lo = sums_.empty() ? std::numeric_limits<int>::max() : offset_;
  int hi = sums_.empty() ? std::numeric_limits<int>::min() : offset_ + static_cast<int>(sums_.size()) - 1;
  for (int side = 0; side < 2; ++side) {
    if (!has_origin_[side]) continue;
    lo = std::min(lo, -origin_level_[side]);
    hi = std::max(hi, -origin_level_[side]);
  }
  const double inv_p = reciprocal(p_);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo + 2));
  for (int j = lo; j <= hi; ++j) {
    double s = 0.0;
    const int idx = j - offset_;
    if (!sums_.empty() && idx >= 0 && idx < static_cast<int>(sums_.size())) s = sums_[static_cast<std::size_t>(idx)];
    for (int side = 0; side < 2; ++side) {
      if (has_origin_[side] && j <= -origin_level_[side]) {
        merge(s, cell_power(origin_value_[side], std::ldexp(1.0, j - 1)));
      }
    }
    if (s == 0.0) continue;
    const double lp = p_ == kInf ? s : (p_ == 2.0 ? std::sqrt(s) : std::pow(s, inv_p));
    terms.push_back(std::exp2(j * alpha_) * lp);
  }
  if (any_origin) {
    // Every annulus j < lo sees both origin cells only.
    double t = 0.0;
    for (int side = 0; side < 2; ++side) {
      if (has_origin_[side]) merge(t, cell_power(origin_value_[side], 1.0));
    }
    const double j0 = static_cast<double>(lo - 1);
    if (q_ == kInf) {
      const double lp = p_ == kInf ? t : std::pow(t * std::exp2(j0 - 1.0), inv_p);
      terms.push_back(std::exp2(j0 * alpha_) * lp);
    } else {
      const double e = (alpha_ + inv_p) * q_;
      const double base = p_ == kInf ? std::pow(t, q_) : std::pow(t, q_ * inv_p) * std::exp2(-q_ * inv_p);
      const double tail = base * std::exp2(j0 * e) / (1.0 - std::exp2(-e));
      terms.push_back(std::pow(tail, 1.0 / q_));
    }
  }
  return lq_norm(terms, q_);
}

namespace {

/// Applies `reduce(base, stride)` to every line along `axis`.
template <typename Reduce>
SampledField collapse_axis(const SampledField& field, int axis, Reduce reduce) {
  const GridShape& shape = field.shape();
  require(axis >= 0 && axis < shape.n, "invalid axis for this field");
  require(field.domain() == Domain::space, "norms need a space-domain field");
  SampledField out(shape.collapsed());
  const Index s = shape.stride(axis);
  const Index block = s * shape.G;
  for (Index outer = 0; outer < shape.size(); outer += block) {
    for (Index inner = 0; inner < s; ++inner) {
      out[(outer / block) * s + inner] = reduce(outer + inner, s);
    }
  }
  return out;
}

}  // namespace

SampledField axis_lp_norm(const SampledField& field, int axis, double p) {
  require(p > 0.0 && !std::isnan(p), "p must lie in (0, inf]");
  const double h = field.shape().spacing();
  const Index G = field.shape().G;
  const auto& v = field.values();
  return collapse_axis(field, axis, [&](Index base, Index stride) {
    std::vector<double> mags(static_cast<std::size_t>(G));
    for (Index j = 0; j < G; ++j) mags[j] = std::abs(v[base + j * stride]);
    if (p == kInf) return *std::max_element(mags.begin(), mags.end());
    // l^p of the samples, times h^(1/p).
    return lq_norm(mags, p) * std::pow(h, 1.0 / p);
  });
}

SampledField axis_herz_norm(const SampledField& field, int axis, double p, double alpha, double q) {
  const GridShape& shape = field.shape();
  require(axis >= 0 && axis < shape.n, "invalid axis for this field");
  AnnulusAccumulator acc(p, alpha, q);
  const int origin_level = DyadicGeometry::of(shape).v_max;
  std::vector<int> annulus(static_cast<std::size_t>(shape.G));
  for (Index j = 0; j < shape.G; ++j) annulus[j] = axis_annulus(shape, j);
  const double h = shape.spacing();
  const Index centre = shape.G / 2;
  const auto& v = field.values();
  return collapse_axis(field, axis, [&](Index base, Index stride) {
    acc.clear();
    for (Index j = 0; j < shape.G; ++j) {
      const double mag = std::abs(v[base + j * stride]);
      if (annulus[j] == kOriginCell) {
        acc.add_origin(j == centre, origin_level, mag);
      } else {
        acc.add(annulus[j], mag, h);
      }
    }
    return acc.norm();
  });
}

double mixed_herz_norm(const SampledField& field, const HerzParams& params) {
  require(params.dim() == field.dim(), "Herz parameters and field differ in dimension");
  SampledField current = field;
  for (int i = 0; i < params.dim(); ++i) {
    current = axis_herz_norm(current, 0, params.p[i], params.alpha[i], params.q[i]);
  }
  return std::abs(current.scalar());
}

double mixed_lebesgue_norm(const SampledField& field, const Eigen::ArrayXd& p) {
  require(p.size() == field.dim(), "exponent vector and field differ in dimension");
  SampledField current = field;
  for (Index i = 0; i < p.size(); ++i) current = axis_lp_norm(current, 0, p[i]);
  return std::abs(current.scalar());
}

}  // namespace herzlab
