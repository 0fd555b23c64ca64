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

#ifndef HERZLAB_EMBEDLAB_HPP
#define HERZLAB_EMBEDLAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "herzlab/seqspace.hpp"
#include "herzlab/spaces.hpp"

namespace herzlab {

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Per-axis fine index of the larger space: r_i where alpha2_i == alpha1_i,
/// nu_i otherwise.
Eigen::ArrayXd theta_rule(const Eigen::ArrayXd& alpha1, const Eigen::ArrayXd& alpha2, const Eigen::ArrayXd& r,
                          const Eigen::ArrayXd& nu);

/// s2 - 1/q_v + 1/p_v - alpha1_v + alpha2_v for axis v (1-based).
double shifted_smoothness(double s2, const HerzParams& source, const HerzParams& target, int v);

/// r_n if r_n <= p_n, else p_n.
double franke_delta(double r_n, double p_n);

enum class Theorem { identity, sobolev, jawerth, franke };
enum class Balance { equal, less, greater };

/// Source space (smaller) and target space (larger) of a sequence embedding.
struct EmbeddingSpec {
  Theorem theorem = Theorem::identity;
  SeqSpaceParams source;
  SeqSpaceParams target;
  /// Balance deliberately broken; the check then expects growth.
  bool control = false;

  /// s2 - 1/q - alpha2 of the source.
  double source_level() const;
  /// s1 - 1/p - alpha1 of the target.
  double target_level() const;
  Balance classify() const;
  std::string describe() const;
};

/// Source f^{s2}_theta over (q, alpha2, r); target f^{s1}_beta over
/// (p, alpha1, r), with s1 fixed by the balance.
EmbeddingSpec make_sobolev_spec(const HerzParams& source, const Eigen::ArrayXd& p, const Eigen::ArrayXd& alpha1,
                                double s2, double theta, double beta);
/// Source f^{s2}_theta over (q, alpha2, r2); target b over (p, alpha1, r1)
/// with outer index r2_n, or max(r2_n, q_n) when alpha2_n == alpha1_n.
EmbeddingSpec make_jawerth_spec(const HerzParams& source, const HerzParams& target, double s2, double theta);
/// Source b over (q, alpha2, r) with outer index r_n, or the Franke delta
/// when alpha2_n == alpha1_n; target f^{s1}_theta over (p, alpha1, r).
EmbeddingSpec make_franke_spec(const HerzParams& source, const HerzParams& target, double s2, double theta);
EmbeddingSpec make_identity_spec(const SeqSpaceParams& params);
/// Copy with the source smoothness lowered by `amount` and control set.
EmbeddingSpec make_control(const EmbeddingSpec& spec, double amount = 0.25);

/// Throws naming the first violated hypothesis of the invoked theorem.
void check_hypotheses(const EmbeddingSpec& spec);

struct EnsembleConfig {
  std::size_t size = 1000;
  std::uint64_t seed = 1;
  /// Cells with 2^-k m in [-window/2, window/2)^n are eligible.
  double window = 2.0;
  /// Occupancy density at level k is 2^(-n k sparsity).
  double sparsity = 0.5;
  /// Share of draws holding one to three spikes at uniform levels instead
  /// of the per-level occupancy. Spike offsets are uniform over dyadic
  /// distance bands from the origin.
  double spike_fraction = 0.9;
};

/// Random sparse coefficients on levels 0..K: a few-spike draw with
/// probability spike_fraction, otherwise per-level Bernoulli occupancy.
CoeffSeq random_coefficients(int n, int K, const EnsembleConfig& config, Rng& rng);

struct EnsembleStats {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t count = 0;
  std::size_t argmax = 0;
};

/// Target over source norm ratios for `config.size` random draws.
EnsembleStats seq_embedding_check(const EmbeddingSpec& spec, int K, const EnsembleConfig& config);

enum class DilationMode { co_dilated, fixed_grid };

struct DilationScan {
  std::vector<double> norms;
  double slope = 0.0;
  double predicted = 0.0;
};

/// Herz norms of f_N for N = 0..N_max; slope fitted over all N.
DilationScan herz_dilation_scan(const HerzParams& params, const GridShape& base, int N_max, std::uint64_t seed,
                                DilationMode mode = DilationMode::co_dilated);
/// Besov norms of f_N for N = 0..N_max; slope fitted over N = 1..N_max.
DilationScan dilation_scan(const SpaceParams& params, const GridShape& base, int N_max, std::uint64_t seed,
                           DilationMode mode = DilationMode::co_dilated);

struct NecessityFit {
  std::vector<double> ratios;
  double c = 0.0;
  double predicted = 0.0;
};

/// Fits ||f_N||_target / ||f_N||_source = 2^(cN) over N = 1..N_max for
/// B-family spaces.
NecessityFit necessity_fit(const SpaceParams& source, const SpaceParams& target, const GridShape& base, int N_max,
                           std::uint64_t seed, DilationMode mode = DilationMode::co_dilated);

struct PpnFit {
  std::vector<double> ratios;
  double slope = 0.0;
  double gamma = 0.0;
};

/// Source E^{alpha2, theta}_p, target K^{alpha1, r}_s; fits the log-ratio of
/// ||f_N||_target / (2^(N gamma) ||f_N||_source) over N = 1..N_max.
PpnFit ppn_check(const HerzParams& source, const HerzParams& target, const GridShape& base, int N_max,
                 std::uint64_t seed, DilationMode mode = DilationMode::co_dilated);

/// (sum_i a^(i min(1,q)))^(1/min(1,q)).
double hardy_constant(double a, double q);
/// max(||delta||_q, ||eta||_q) / ||eps||_q for eps supported on 0..size-1.
double hardy_ratio(double a, double q, const std::vector<double>& eps);

struct HardyStats {
  double max_ratio = 0.0;
  double constant = 0.0;
  std::size_t count = 0;
};

HardyStats hardy_check(double a, double q, std::size_t ensemble, std::uint64_t seed, std::size_t length = 16);

}  // namespace herzlab

#endif  // HERZLAB_EMBEDLAB_HPP
