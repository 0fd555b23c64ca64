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

#include "herzlab/embedlab.hpp"

#include <cmath>
#include <sstream>

namespace herzlab {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "fit needs at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  require(sxx > 0.0, "fit needs distinct abscissae");
  return sxy / sxx;
}

Eigen::ArrayXd theta_rule(const Eigen::ArrayXd& alpha1, const Eigen::ArrayXd& alpha2, const Eigen::ArrayXd& r,
                          const Eigen::ArrayXd& nu) {
  require(alpha1.size() == alpha2.size() && r.size() == alpha1.size() && nu.size() == alpha1.size(),
          "theta rule inputs differ in length");
  Eigen::ArrayXd theta(alpha1.size());
  for (Index i = 0; i < alpha1.size(); ++i) {
    require(alpha2[i] >= alpha1[i], "theta rule needs alpha2_i >= alpha1_i");
    theta[i] = alpha2[i] == alpha1[i] ? r[i] : nu[i];
  }
  return theta;
}

double shifted_smoothness(double s2, const HerzParams& source, const HerzParams& target, int v) {
  require(v >= 1 && v <= source.dim() && source.dim() == target.dim(), "axis v out of range");
  double shift = 0.0;
  for (int i = 0; i < v; ++i) {
    shift += -reciprocal(source.p[i]) + reciprocal(target.p[i]) - target.alpha[i] + source.alpha[i];
  }
  return s2 + shift;
}

double franke_delta(double r_n, double p_n) { return r_n <= p_n ? r_n : p_n; }

double EmbeddingSpec::source_level() const {
  return source.s - source.herz.inv_p_sum() - source.herz.alpha_sum();
}

double EmbeddingSpec::target_level() const {
  return target.s - target.herz.inv_p_sum() - target.herz.alpha_sum();
}

Balance EmbeddingSpec::classify() const {
  const double diff = target_level() - source_level();
  if (std::abs(diff) <= 1e-12) return Balance::equal;
  return diff < 0.0 ? Balance::less : Balance::greater;
}

std::string EmbeddingSpec::describe() const {
  static const char* names[] = {"identity", "sobolev", "jawerth", "franke"};
  std::ostringstream out;
  out << names[static_cast<int>(theorem)] << (control ? " control" : "") << " | source " << source.describe()
      << " | target " << target.describe();
  return out.str();
}

namespace {

double balanced_s1(const HerzParams& source, const HerzParams& target, double s2) {
  return s2 - source.inv_p_sum() - source.alpha_sum() + target.inv_p_sum() + target.alpha_sum();
}

}  // namespace

EmbeddingSpec make_sobolev_spec(const HerzParams& source, const Eigen::ArrayXd& p, const Eigen::ArrayXd& alpha1,
                                double s2, double theta, double beta) {
  const HerzParams target(p, alpha1, source.q);
  EmbeddingSpec spec;
  spec.theorem = Theorem::sobolev;
  spec.source = SeqSpaceParams(source, s2, theta, SeqFamily::f);
  spec.target = SeqSpaceParams(target, balanced_s1(source, target, s2), beta, SeqFamily::f);
  return spec;
}

EmbeddingSpec make_jawerth_spec(const HerzParams& source, const HerzParams& target, double s2, double theta) {
  require(source.dim() == target.dim(), "source and target differ in dimension");
  const int n = source.dim() - 1;
  const double outer = source.alpha[n] > target.alpha[n] ? source.q[n] : std::max(source.q[n], source.p[n]);
  EmbeddingSpec spec;
  spec.theorem = Theorem::jawerth;
  spec.source = SeqSpaceParams(source, s2, theta, SeqFamily::f);
  spec.target = SeqSpaceParams(target, balanced_s1(source, target, s2), outer, SeqFamily::b);
  return spec;
}

EmbeddingSpec make_franke_spec(const HerzParams& source, const HerzParams& target, double s2, double theta) {
  require(source.dim() == target.dim(), "source and target differ in dimension");
  const int n = source.dim() - 1;
  const double delta =
      source.alpha[n] > target.alpha[n] ? source.q[n] : franke_delta(source.q[n], target.p[n]);
  EmbeddingSpec spec;
  spec.theorem = Theorem::franke;
  spec.source = SeqSpaceParams(source, s2, delta, SeqFamily::b);
  spec.target = SeqSpaceParams(target, balanced_s1(source, target, s2), theta, SeqFamily::f);
  return spec;
}

EmbeddingSpec make_identity_spec(const SeqSpaceParams& params) {
  EmbeddingSpec spec;
  spec.source = params;
  spec.target = params;
  return spec;
}

EmbeddingSpec make_control(const EmbeddingSpec& spec, double amount) {
  EmbeddingSpec c = spec;
  c.source.s -= amount;
  c.control = true;
  return c;
}

void check_hypotheses(const EmbeddingSpec& spec) {
  const HerzParams& src = spec.source.herz;
  const HerzParams& tgt = spec.target.herz;
  require(src.dim() == tgt.dim(), "hypothesis violated: source and target dimensions differ");
  const int n = src.dim();
  if (spec.theorem == Theorem::identity) {
    require((src.p == tgt.p).all() && (src.alpha == tgt.alpha).all() && (src.q == tgt.q).all() &&
                spec.source.s == spec.target.s && spec.source.beta == spec.target.beta &&
                spec.source.family == spec.target.family,
            "hypothesis violated: identity spec needs equal source and target");
    return;
  }
  for (int i = 0; i < n; ++i) {
    require(src.p[i] < tgt.p[i], "hypothesis violated: q_i < p_i");
    require(std::isfinite(tgt.p[i]), "hypothesis violated: p_i < inf");
    require(tgt.alpha[i] > -reciprocal(tgt.p[i]), "hypothesis violated: alpha1_i > -1/p_i");
    require(src.alpha[i] >= tgt.alpha[i], "hypothesis violated: alpha2_i >= alpha1_i");
  }
  switch (spec.theorem) {
    case Theorem::sobolev:
      require(spec.source.family == SeqFamily::f && spec.target.family == SeqFamily::f,
              "hypothesis violated: Sobolev embedding maps f to f");
      require((src.q == tgt.q).all(), "hypothesis violated: Sobolev embedding needs a common r");
      break;
    case Theorem::jawerth: {
      require(spec.source.family == SeqFamily::f && spec.target.family == SeqFamily::b,
              "hypothesis violated: Jawerth embedding maps f to b");
      for (int i = 0; i + 1 < n; ++i) {
        if (src.alpha[i] == tgt.alpha[i]) {
          require(src.q[i] == tgt.q[i], "hypothesis violated: r2_i = r1_i where alpha2_i = alpha1_i");
        }
      }
      const double outer =
          src.alpha[n - 1] > tgt.alpha[n - 1] ? src.q[n - 1] : std::max(src.q[n - 1], src.p[n - 1]);
      require(spec.target.beta == outer, "hypothesis violated: Jawerth outer index");
      break;
    }
    case Theorem::franke: {
      require(spec.source.family == SeqFamily::b && spec.target.family == SeqFamily::f,
              "hypothesis violated: Franke embedding maps b to f");
      require((src.q == tgt.q).all(), "hypothesis violated: Franke embedding needs a common r");
      const double delta = src.alpha[n - 1] > tgt.alpha[n - 1] ? src.q[n - 1]
                                                                : franke_delta(src.q[n - 1], tgt.p[n - 1]);
      require(spec.source.beta == delta, "hypothesis violated: Franke source index delta");
      break;
    }
    case Theorem::identity:
      break;
  }
  if (spec.control) {
    require(spec.classify() == Balance::greater,
            "control spec must break the balance with s1 - 1/p - alpha1 > s2 - 1/q - alpha2");
  } else {
    require(spec.classify() == Balance::equal,
            "hypothesis violated: s1 - 1/p - alpha1 = s2 - 1/q - alpha2");
  }
}

namespace {

std::int64_t window_cells(const EnsembleConfig& config, int k) {
  const double per_axis = config.window * std::ldexp(1.0, k);
  require(per_axis >= 1.0 && per_axis == std::floor(per_axis),
          "ensemble window must hold a whole number of level-k cells");
  return static_cast<std::int64_t>(per_axis);
}

LatticePoint cell_of(std::int64_t idx, std::int64_t per_axis, int n) {
  LatticePoint m{0, 0, 0};
  for (int i = 0; i < n; ++i) {
    m[i] = idx % per_axis - per_axis / 2;
    idx /= per_axis;
  }
  return m;
}

Complex draw_value(Rng& rng) {
  const double magnitude = 1.0 / std::sqrt(rng.uniform_open());
  const double phase = rng.uniform(0.0, 2.0 * kPi);
  return std::polar(magnitude, phase);
}

}  // namespace

CoeffSeq random_coefficients(int n, int K, const EnsembleConfig& config, Rng& rng) {
  require(config.window > 0.0, "ensemble window must be positive");
  require(config.spike_fraction >= 0.0 && config.spike_fraction <= 1.0, "spike_fraction must lie in [0, 1]");
  CoeffSeq coeffs(n, K);
  if (rng.uniform() < config.spike_fraction) {
    const std::uint64_t count = 1 + rng.below(3);
    for (std::uint64_t e = 0; e < count; ++e) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(K) + 1));
      const std::int64_t half = window_cells(config, k) / 2;
      require(half >= 1, "ensemble window must hold two cells at level 0");
      const int bands = std::max(0, bit_length(static_cast<std::uint64_t>(half)) - 1);
      LatticePoint m{0, 0, 0};
      for (int i = 0; i < n; ++i) {
        // Distance band u holds |m| in [2^(u-1), 2^u); band 0 is the two cells at the origin.
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(bands) + 1));
        const std::int64_t offset =
            u == 0 ? 0
                   : (std::int64_t{1} << (u - 1)) +
                         static_cast<std::int64_t>(rng.below(std::uint64_t{1} << (u - 1)));
        m[i] = rng.below(2) == 0 ? offset : -offset - 1;
      }
      coeffs.set(k, m, draw_value(rng));
    }
    return coeffs;
  }
  for (int k = 0; k <= K; ++k) {
    const std::int64_t per_axis = window_cells(config, k);
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= per_axis;
    const double density = std::exp2(-n * k * config.sparsity);
    const double log_miss = density < 1.0 ? std::log1p(-density) : 0.0;
    std::int64_t idx = -1;
    while (true) {
      if (density >= 1.0) {
        ++idx;
      } else {
        idx += 1 + static_cast<std::int64_t>(std::floor(std::log(rng.uniform_open()) / log_miss));
      }
      if (idx >= total) break;
      coeffs.set(k, cell_of(idx, per_axis, n), draw_value(rng));
    }
  }
  return coeffs;
}

EnsembleStats seq_embedding_check(const EmbeddingSpec& spec, int K, const EnsembleConfig& config) {
  check_hypotheses(spec);
  require(config.size > 0, "ensemble size must be positive");
  Rng rng(config.seed);
  EnsembleStats stats;
  for (std::size_t i = 0; i < config.size; ++i) {
    const CoeffSeq lambda = random_coefficients(spec.source.dim(), K, config, rng);
    const double den = seq_norm(lambda, spec.source);
    if (den == 0.0) continue;
    const double ratio = seq_norm(lambda, spec.target) / den;
    if (stats.count == 0 || ratio > stats.max_ratio) {
      stats.max_ratio = ratio;
      stats.argmax = i;
    }
    stats.min_ratio = stats.count == 0 ? ratio : std::min(stats.min_ratio, ratio);
    ++stats.count;
  }
  require(stats.count > 0, "ensemble produced no nonzero draws");
  return stats;
}

namespace {

GridShape scan_grid(const GridShape& base, int N, DilationMode mode) {
  return mode == DilationMode::co_dilated ? base.dilated(N) : base;
}

std::vector<double> levels_from(int first, int last) {
  std::vector<double> x;
  for (int N = first; N <= last; ++N) x.push_back(N);
  return x;
}

std::vector<double> log2_tail(const std::vector<double>& v, int first) {
  std::vector<double> y;
  for (std::size_t i = static_cast<std::size_t>(first); i < v.size(); ++i) y.push_back(std::log2(v[i]));
  return y;
}

int fit_start(int N_max) { return N_max >= 2 ? 1 : 0; }

double witness_besov(const SampledField& f, const SpaceParams& params, const GridShape& grid, int N) {
  const SpectralSystem system = build_resolution(grid, max_resolution_level(grid));
  require(N <= system.levels(), "dilation level N unresolvable on this grid");
  return besov_norm(f, params, system);
}

}  // namespace

DilationScan herz_dilation_scan(const HerzParams& params, const GridShape& base, int N_max, std::uint64_t seed,
                                DilationMode mode) {
  require(N_max >= 1, "dilation scan needs N_max >= 1");
  DilationScan scan;
  for (int N = 0; N <= N_max; ++N) {
    const GridShape grid = scan_grid(base, N, mode);
    scan.norms.push_back(mixed_herz_norm(bandlimited_witness(grid, N, seed), params));
  }
  scan.slope = fit_slope(levels_from(0, N_max), log2_tail(scan.norms, 0));
  scan.predicted = -(params.alpha_sum() + params.inv_p_sum());
  return scan;
}

DilationScan dilation_scan(const SpaceParams& params, const GridShape& base, int N_max, std::uint64_t seed,
                           DilationMode mode) {
  require(params.family == Family::B, "dilation_scan needs a B-family space");
  require(N_max >= 1, "dilation scan needs N_max >= 1");
  DilationScan scan;
  for (int N = 0; N <= N_max; ++N) {
    const GridShape grid = scan_grid(base, N, mode);
    scan.norms.push_back(witness_besov(bandlimited_witness(grid, N, seed), params, grid, N));
  }
  const int first = fit_start(N_max);
  scan.slope = fit_slope(levels_from(first, N_max), log2_tail(scan.norms, first));
  scan.predicted = params.s - params.herz.alpha_sum() - params.herz.inv_p_sum();
  return scan;
}

NecessityFit necessity_fit(const SpaceParams& source, const SpaceParams& target, const GridShape& base, int N_max,
                           std::uint64_t seed, DilationMode mode) {
  require(source.family == Family::B && target.family == Family::B, "necessity_fit needs B-family spaces");
  require(source.herz.dim() == target.herz.dim(), "source and target differ in dimension");
  require(N_max >= 1, "necessity fit needs N_max >= 1");
  for (int i = 0; i < source.herz.dim(); ++i) {
    require(source.herz.p[i] <= target.herz.p[i], "hypothesis violated: q_i <= p_i");
    require(target.herz.alpha[i] > -reciprocal(target.herz.p[i]), "hypothesis violated: -1/p_i < alpha1_i");
    require(target.herz.alpha[i] <= source.herz.alpha[i], "hypothesis violated: alpha1_i <= alpha2_i");
  }
  NecessityFit fit;
  for (int N = 0; N <= N_max; ++N) {
    const GridShape grid = scan_grid(base, N, mode);
    const SampledField f = bandlimited_witness(grid, N, seed);
    fit.ratios.push_back(witness_besov(f, target, grid, N) / witness_besov(f, source, grid, N));
  }
  const int first = fit_start(N_max);
  fit.c = fit_slope(levels_from(first, N_max), log2_tail(fit.ratios, first));
  fit.predicted = target.s - source.s - target.herz.alpha_sum() + source.herz.alpha_sum() -
                  target.herz.inv_p_sum() + source.herz.inv_p_sum();
  return fit;
}

PpnFit ppn_check(const HerzParams& source, const HerzParams& target, const GridShape& base, int N_max,
                 std::uint64_t seed, DilationMode mode) {
  require(source.dim() == target.dim(), "source and target differ in dimension");
  require(N_max >= 1, "PPN check needs N_max >= 1");
  for (int i = 0; i < source.dim(); ++i) {
    require(target.alpha[i] + reciprocal(target.p[i]) > 0.0, "hypothesis violated: alpha1_i + 1/s_i > 0");
    require(source.p[i] <= target.p[i], "hypothesis violated: p_i <= s_i");
    require(source.alpha[i] >= target.alpha[i], "hypothesis violated: alpha2_i >= alpha1_i");
    if (source.alpha[i] == target.alpha[i]) {
      require(source.q[i] == target.q[i], "hypothesis violated: theta_i = r_i where alpha2_i = alpha1_i");
    }
  }
  PpnFit fit;
  fit.gamma = source.inv_p_sum() - target.inv_p_sum() + source.alpha_sum() - target.alpha_sum();
  for (int N = 0; N <= N_max; ++N) {
    const GridShape grid = scan_grid(base, N, mode);
    const SampledField f = bandlimited_witness(grid, N, seed);
    fit.ratios.push_back(mixed_herz_norm(f, target) / (std::exp2(N * fit.gamma) * mixed_herz_norm(f, source)));
  }
  const int first = fit_start(N_max);
  fit.slope = fit_slope(levels_from(first, N_max), log2_tail(fit.ratios, first));
  return fit;
}

double hardy_constant(double a, double q) {
  require(a > 0.0 && a < 1.0, "Hardy check needs 0 < a < 1");
  require(q > 0.0, "Hardy check needs q > 0");
  const double m = std::min(1.0, q);
  return std::pow(1.0 / (1.0 - std::pow(a, m)), 1.0 / m);
}

double hardy_ratio(double a, double q, const std::vector<double>& eps) {
  require(a > 0.0 && a < 1.0, "Hardy check needs 0 < a < 1");
  require(q > 0.0, "Hardy check needs q > 0");
  const std::size_t M = eps.size();
  if (M == 0) return 0.0;
  for (double e : eps) require(e >= 0.0 && std::isfinite(e), "Hardy sequence must be finite and nonnegative");
  std::vector<double> delta(M);
  std::vector<double> eta(M);
  double run = 0.0;
  for (std::size_t k = 0; k < M; ++k) {
    run = a * run + eps[k];
    delta[k] = run;
  }
  run = 0.0;
  for (std::size_t k = M; k-- > 0;) {
    run = a * run + eps[k];
    eta[k] = run;
  }
  const double base = lq_norm(eps, q);
  if (base == 0.0) return 0.0;
  // Geometric tails: delta beyond the support, eta before it.
  auto with_tail = [&](std::vector<double> seq, double edge) {
    if (q != kInf && edge > 0.0) {
      const double tail = std::pow(edge, q) * std::pow(a, q) / (1.0 - std::pow(a, q));
      seq.push_back(std::pow(tail, 1.0 / q));
    }
    return lq_norm(seq, q);
  };
  const double d = with_tail(delta, delta.back());
  const double e = with_tail(eta, eta.front());
  return std::max(d, e) / base;
}

HardyStats hardy_check(double a, double q, std::size_t ensemble, std::uint64_t seed, std::size_t length) {
  HardyStats stats;
  stats.constant = hardy_constant(a, q);
  Rng rng(seed);
  for (std::size_t i = 0; i < ensemble; ++i) {
    std::vector<double> eps(length, 0.0);
    for (double& e : eps) {
      const double keep = rng.uniform();
      const double magnitude = 1.0 / std::sqrt(rng.uniform_open());
      if (keep < 0.5) e = magnitude;
    }
    stats.max_ratio = std::max(stats.max_ratio, hardy_ratio(a, q, eps));
    ++stats.count;
  }
  return stats;
}

}  // namespace herzlab
