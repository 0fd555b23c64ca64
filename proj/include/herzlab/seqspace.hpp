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

#ifndef HERZLAB_SEQSPACE_HPP
#define HERZLAB_SEQSPACE_HPP

#include <span>
#include <vector>

#include "herzlab/frames.hpp"
#include "herzlab/herz.hpp"

namespace herzlab {

enum class SeqFamily { b, f };

struct SeqSpaceParams {
  HerzParams herz;
  double s = 0.0;
  double beta = 2.0;
  SeqFamily family = SeqFamily::b;

  SeqSpaceParams() = default;
  SeqSpaceParams(HerzParams herz, double s, double beta, SeqFamily family);
  int dim() const { return herz.dim(); }
  std::string describe() const;
};

/// One dyadic cube 2^-level([0,1)^n + m) carrying a nonnegative value.
struct StepCell {
  int level = 0;
  LatticePoint m{0, 0, 0};
  double value = 0.0;
};

/// Exact mixed Herz norm of a function constant on pairwise disjoint cubes.
double step_herz_norm(int n, std::vector<StepCell> cells, const HerzParams& params);

/// Disjoint cells of the pointwise l^beta combination used by f_norm.
std::vector<StepCell> f_profile_cells(const CoeffSeq& coeffs, const SeqSpaceParams& params);

double b_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params);
double f_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params);
/// Dispatches on params.family.
double seq_norm(const CoeffSeq& coeffs, const SeqSpaceParams& params);

/// Default lambda-star window: 64 cells in 1D, 16 otherwise.
int default_star_window(int n);

/// Peetre-type majorant over the bounding box of each level widened by
/// `window` cells. Each output entry is at least |lambda| at that point.
CoeffSeq lambda_star(const CoeffSeq& coeffs, double r, double d, int window);

/// Non-increasing step profile on (0, inf).
class RearrangedProfile {
 public:
  RearrangedProfile(std::vector<double> values, std::vector<double> widths);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& widths() const { return widths_; }
  /// Right endpoints t_1 < t_2 < ...
  std::vector<double> breakpoints() const;
  double total_measure() const;
  /// f*(t) for t >= 0.
  double operator()(double t) const;
  double lp_norm(double p) const;
  /// (sum_j 2^j f*(2^j)^p)^(1/p) over all integers j.
  double dyadic_norm(double p) const;

 private:
  std::vector<double> values_;
  std::vector<double> widths_;
};

RearrangedProfile rearrange(std::span<const double> values, std::span<const double> measures);
RearrangedProfile rearrange(const SampledField& field);

}  // namespace herzlab

#endif  // HERZLAB_SEQSPACE_HPP
