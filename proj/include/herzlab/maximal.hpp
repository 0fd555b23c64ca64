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

#ifndef HERZLAB_MAXIMAL_HPP
#define HERZLAB_MAXIMAL_HPP

#include <span>

#include "herzlab/herz.hpp"

namespace herzlab {

/// eta_{R,N}(x) = R^n prod_i (1 + R|x_i|)^(-N).
struct EtaKernel {
  double R = 1.0;
  double N = 2.0;
  int n = 1;

  EtaKernel(double R, double N, int n);
  double operator()(std::span<const double> x) const;
};

/// Centered maximal function along one axis.
///
/// At each sample the sup runs over periodic windows of 2r+1 cells centred
/// on that sample's cell, r = 0, ..., G/2 - 1.
SampledField axis_maximal(const SampledField& field, int axis);

/// (M_n ... M_1 |f|^t)^(1/t).
SampledField iterated_maximal(const SampledField& field, double t);

/// Ratio of Herz norms of (sum_j (M_t f_j)^beta)^(1/beta) and
/// (sum_j |f_j|^beta)^(1/beta).
double fs_vector_check(std::span<const SampledField> family, const HerzParams& params, double beta, double t);

/// Minimum over samples of (eta_{2^j, m/n} * |g|^r)^(1/r) / |g|.
double rtrick_check(const SampledField& g, int j, double r, double m);

/// Periodic convolution sum_y kernel(x - y) a(y) h^n, kernel taken at
/// minimal-image offsets.
SampledField periodic_convolution(const SampledField& a, const EtaKernel& kernel);

}  // namespace herzlab

#endif  // HERZLAB_MAXIMAL_HPP
