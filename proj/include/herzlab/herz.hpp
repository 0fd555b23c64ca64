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

#ifndef HERZLAB_HERZ_HPP
#define HERZLAB_HERZ_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "herzlab/grid.hpp"

namespace herzlab {

/// Per-axis exponents (p, alpha, q) of a mixed-norm Herz space.
struct HerzParams {
  Eigen::ArrayXd p;
  Eigen::ArrayXd alpha;
  Eigen::ArrayXd q;

  HerzParams() = default;
  HerzParams(Eigen::ArrayXd p, Eigen::ArrayXd alpha, Eigen::ArrayXd q);
  static HerzParams uniform(int n, double p, double alpha, double q);

  int dim() const { return static_cast<int>(p.size()); }
  /// Sum of 1/p_i with 1/inf = 0.
  double inv_p_sum() const;
  double alpha_sum() const { return alpha.sum(); }
  double p_min() const { return p.minCoeff(); }
  double q_min() const { return q.minCoeff(); }
  bool all_finite() const;
  std::string describe() const;
};

/// Accumulates one-dimensional Herz sums over cells with known annulus.
///
/// Cells touching the origin are held apart: a constant c on [0, 2^-l)
/// contributes |c|^p 2^(j-1) to every annulus j <= -l, and that tail is
/// summed in closed form.
class AnnulusAccumulator {
 public:
  AnnulusAccumulator(double p, double alpha, double q);

  void clear();
  /// Cell of the given measure lying inside annulus k.
  void add(int k, double magnitude, double measure);
  /// Cell [0, 2^-level) if positive, else [-2^-level, 0).
  void add_origin(bool positive, int level, double magnitude);
  double norm() const;

 private:
  double cell_power(double magnitude, double measure) const;
  void merge(double& slot, double value) const;

  double p_;
  double alpha_;
  double q_;
  std::vector<double> sums_;
  int offset_ = 0;
  bool has_origin_[2] = {false, false};
  int origin_level_[2] = {0, 0};
  double origin_value_[2] = {0.0, 0.0};
};

/// Quasi-norm of a finite nonnegative sequence: l^q, or max for q = inf.
/// Computed as a_max (sum (a/a_max)^q)^(1/q).
double lq_norm(const std::vector<double>& a, double q);

SampledField axis_lp_norm(const SampledField& field, int axis, double p);
SampledField axis_herz_norm(const SampledField& field, int axis, double p, double alpha, double q);
double mixed_herz_norm(const SampledField& field, const HerzParams& params);
double mixed_lebesgue_norm(const SampledField& field, const Eigen::ArrayXd& p);

}  // namespace herzlab

#endif  // HERZLAB_HERZ_HPP
