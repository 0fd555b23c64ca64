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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "herzlab/cli.hpp"
#include "herzlab/embedlab.hpp"
#include "herzlab/frames.hpp"
#include "herzlab/maximal.hpp"
#include "herzlab/report.hpp"
#include "herzlab/seqspace.hpp"
#include "herzlab/spaces.hpp"

using namespace herzlab;

namespace {

constexpr double kCoincidenceTol = 1e-10;
constexpr double kCoincidenceSeconds = 10.0;
constexpr double kDilationTol = 1e-3;
constexpr double kDilationSeconds = 30.0;
constexpr double kPartitionTol = 1e-12;
constexpr double kRoundTripTol = 1e-8;
constexpr double kSeqExactTol = 1e-10;
constexpr double kStarStability = 0.10;
constexpr double kSlopeTol = 0.05;
constexpr double kControlSlope = 0.2;
constexpr double kEmbeddingSeconds = 300.0;
constexpr double kFitTol = 0.05;
constexpr double kHardyRounding = 1e-12;

struct Outcome {
  bool pass = false;
  std::string detail;
  Report report;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Eigen::ArrayXd vec(std::initializer_list<double> values) {
  Eigen::ArrayXd a(static_cast<Index>(values.size()));
  Index i = 0;
  for (double v : values) a[i++] = v;
  return a;
}

SampledField white_field(const GridShape& shape, Rng& rng) {
  SampledField f(shape);
  for (Index j = 0; j < f.size(); ++j) f[j] = Complex(rng.normal(), rng.normal());
  return f;
}

void add_row(Report& report, const std::string& label, double value) {
  Record r;
  r.add("label", label).add("value", value);
  report.records.push_back(r);
}

// 1
Outcome coincidence() {
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int n : {1, 2}) {
    const GridShape shape(n, 16.0, n == 1 ? 1024 : 256);
    for (int i = 0; i < 100; ++i) {
      const double p = std::vector<double>{1.0, 2.0, 4.0}[static_cast<std::size_t>(i % 3)];
      const SampledField f = white_field(shape, rng);
      const double a = mixed_herz_norm(f, HerzParams::uniform(n, p, 0.0, p));
      const double b = mixed_lebesgue_norm(f, Eigen::ArrayXd::Constant(n, p));
      worst = std::max(worst, std::abs(a - b) / b);
    }
  }
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = worst <= kCoincidenceTol && t <= kCoincidenceSeconds;
  o.detail = "max relative difference " + fmt(worst) + " (tol " + fmt(kCoincidenceTol) + "), " + fmt(t) + " s (limit " +
             fmt(kCoincidenceSeconds) + " s)";
  return o;
}

// 2
Outcome dilation_law() {
  const auto t0 = Clock::now();
  const GridShape base(1, 32.0, 512);
  const std::vector<std::array<double, 3>> sets{
      {2.0, 0.0, 2.0}, {1.0, 0.5, 1.0}, {4.0, -0.2, 0.5}, {0.5, 1.0, kInf}, {3.0, 2.0, 2.0}};
  double worst = 0.0;
  for (const auto& [p, alpha, q] : sets) {
    const DilationScan scan = herz_dilation_scan(HerzParams::uniform(1, p, alpha, q), base, 4, 17);
    worst = std::max(worst, std::abs(scan.slope - scan.predicted));
  }
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = worst <= kDilationTol && t <= kDilationSeconds;
  o.detail = "max |slope + (alpha + 1/p)| " + fmt(worst) + " over 5 sets, N=0..4 (tol " + fmt(kDilationTol) + "), " +
             fmt(t) + " s (limit " + fmt(kDilationSeconds) + " s)";
  return o;
}

double identity_deviation(const SpectralSystem& sys) {
  const Eigen::ArrayXd r = radial_frequencies(sys.shape());
  const bool squares = sys.kind() == SystemKind::fj_pair;
  double dev = 0.0;
  for (Index j = 0; j < r.size(); ++j) {
    if (r[j] > sys.exact_band()) continue;
    double total = 0.0;
    for (int k = 0; k <= sys.levels(); ++k) {
      const double m = sys.multiplier(k)[j];
      total += squares ? m * sys.synthesis_multiplier(k)[j] : m;
    }
    dev = std::max(dev, std::abs(total - 1.0));
  }
  return dev;
}

// 3
Outcome partition() {
  double worst = 0.0;
  for (const GridShape& shape : {GridShape(1, 64.0, 4096), GridShape(2, 8.0, 512)}) {
    for (int K = 0; K <= 6; ++K) {
      worst = std::max(worst, identity_deviation(build_resolution(shape, K)));
      worst = std::max(worst, identity_deviation(build_fj_pair(shape, K)));
    }
  }
  Outcome o;
  o.pass = worst <= kPartitionTol;
  o.detail = "max deviation from 1, K=0..6, both systems, 1D and 2D: " + fmt(worst) + " (tol " + fmt(kPartitionTol) + ")";
  return o;
}

// 4
Outcome round_trip() {
  Outcome o;
  double worst = 0.0;
  Rng rng(404);
  const GridShape line(1, 64.0, 4096);
  const GridShape plane(2, 16.0, 512);
  const SpectralSystem s1 = build_fj_pair(line, 4);
  const SpectralSystem s2 = build_fj_pair(plane, 3);
  for (int i = 0; i < 100; ++i) {
    const double e = roundtrip_error(random_bandlimited_field(line, s1.exact_band(), rng), s1);
    worst = std::max(worst, e);
    add_row(o.report, "1d", e);
  }
  for (int i = 0; i < 100; ++i) {
    const double e = roundtrip_error(random_bandlimited_field(plane, s2.exact_band(), rng), s2);
    worst = std::max(worst, e);
    add_row(o.report, "2d", e);
  }
  o.pass = worst <= kRoundTripTol;
  o.detail = "max relative L2 error over 100 fields each (1D G=4096, 2D G=512): " + fmt(worst) + " (tol " +
             fmt(kRoundTripTol) + ")";
  return o;
}

// 5
Outcome constant_one() {
  Outcome o;
  const GridShape line(1, 32.0, 512);
  const SpectralSystem sys = build_fj_pair(line, 4);
  Rng rng(505);
  int violations = 0;
  int checks = 0;
  for (Family family : {Family::B, Family::F}) {
    const HerzParams herz = HerzParams::uniform(1, 1.5, 0.1, 1.5);
    const HerzParams herz_q = HerzParams::uniform(1, 1.5, 0.1, 3.0);
    for (int i = 0; i < 100; ++i) {
      const SampledField f = random_bandlimited_field(line, 16.0, rng);
      const double b1 = space_norm(f, SpaceParams(herz, 0.5, 1.0, family), sys);
      const double b2 = space_norm(f, SpaceParams(herz, 0.5, 2.5, family), sys);
      const double q2 = space_norm(f, SpaceParams(herz_q, 0.5, 1.0, family), sys);
      checks += 2;
      if (!(b2 <= b1)) ++violations;
      if (!(q2 <= b1)) ++violations;
      add_row(o.report, family == Family::B ? "B" : "F", b2 / b1);
      add_row(o.report, family == Family::B ? "B-q" : "F-q", q2 / b1);
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations of beta- and q-monotonicity in " + std::to_string(checks) +
             " comparisons (no tolerance)";
  return o;
}

// 6
Outcome explicit_constant() {
  Outcome o;
  const GridShape line(1, 32.0, 512);
  const SpectralSystem sys = build_fj_pair(line, 4);
  const HerzParams herz = HerzParams::uniform(1, 2.0, 0.25, 1.5);
  const double beta2 = 2.0;
  Rng rng(606);
  double worst = 0.0;
  bool ok = true;
  for (double eps : {0.25, 1.0}) {
    const double c = besov_shift_constant(eps, beta2);
    for (int i = 0; i < 100; ++i) {
      const SampledField f = random_bandlimited_field(line, 16.0, rng);
      const double lhs = besov_norm(f, SpaceParams(herz, 0.3, beta2, Family::B), sys);
      const double rhs = besov_norm(f, SpaceParams(herz, 0.3 + eps, kInf, Family::B), sys);
      ok = ok && lhs <= c * rhs;
      worst = std::max(worst, lhs / (c * rhs));
      add_row(o.report, "eps=" + format_double(eps), lhs / (c * rhs));
    }
  }
  o.pass = ok;
  o.detail = "max lhs / (C rhs) over eps in {1/4, 1}, 100 fields each: " + fmt(worst) + " (must be <= 1)";
  return o;
}

SampledField sample_level(const CoeffSeq& c, int k, const GridShape& shape, double weight) {
  const double h = shape.spacing();
  return make_field(shape.n, shape.L, shape.G, [&](auto x) {
    LatticePoint m{0, 0, 0};
    for (int i = 0; i < shape.n; ++i) m[i] = static_cast<std::int64_t>(std::floor(std::ldexp(x[i] + h / 2, k)));
    return Complex(weight * std::abs(c.get(k, m)));
  });
}

// 7
Outcome exact_sequence_norms() {
  Outcome o;
  Rng rng(707);
  double worst = 0.0;
  for (int n : {1, 2}) {
    const GridShape shape(n, 16.0, 128);
    for (int t = 0; t < 50; ++t) {
      CoeffSeq c(n, 3);
      const int count = 1 + static_cast<int>(rng.below(6));
      for (int e = 0; e < count; ++e) {
        const int k = static_cast<int>(rng.below(4));
        LatticePoint m{0, 0, 0};
        const std::int64_t span = std::int64_t{4} << k;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * span))) - span;
        c.set(k, m, Complex(rng.normal(), rng.normal()));
      }
      Eigen::ArrayXd p(n), alpha(n), q(n);
      for (int i = 0; i < n; ++i) {
        p[i] = std::vector<double>{0.7, 1.0, 2.0, 3.0}[rng.below(4)];
        alpha[i] = rng.uniform(-1.0 / p[i] + 0.1, 1.0);
        q[i] = std::vector<double>{0.5, 1.0, 2.0, 4.0}[rng.below(4)];
      }
      const SeqFamily family = t % 2 == 0 ? SeqFamily::b : SeqFamily::f;
      const double beta = std::vector<double>{0.5, 1.0, 2.0, 3.0}[rng.below(4)];
      const SeqSpaceParams params(HerzParams(p, alpha, q), rng.uniform(-1.0, 1.0), beta, family);
      const double w = params.s + 0.5 * n;
      double sampled = 0.0;
      if (family == SeqFamily::b) {
        std::vector<double> terms;
        for (int k = 0; k <= 3; ++k) terms.push_back(mixed_herz_norm(sample_level(c, k, shape, std::exp2(k * w)), params.herz));
        sampled = lq_norm(terms, beta);
      } else {
        std::vector<SampledField> levels;
        for (int k = 0; k <= 3; ++k) levels.push_back(sample_level(c, k, shape, std::exp2(k * w)));
        SampledField pointwise(shape);
        std::vector<double> column(4);
        for (Index j = 0; j < shape.size(); ++j) {
          for (std::size_t k = 0; k < 4; ++k) column[k] = std::abs(levels[k][j]);
          pointwise[j] = lq_norm(column, beta);
        }
        sampled = mixed_herz_norm(pointwise, params.herz);
      }
      const double exact = seq_norm(c, params);
      const double rel = std::abs(exact - sampled) / sampled;
      worst = std::max(worst, rel);
      add_row(o.report, std::to_string(n) + "d", exact);
    }
  }
  o.pass = worst <= kSeqExactTol;
  o.detail = "max relative difference exact vs sampled over 50 lambda in 1D and 50 in 2D: " + fmt(worst) + " (tol " +
             fmt(kSeqExactTol) + ")";
  return o;
}

// 8
Outcome lambda_star_check() {
  Outcome o;
  bool lower_ok = true;
  double worst_shift = 0.0;
  std::string constants;
  for (int n : {1, 2}) {
    // a = min(1, p-, q-, beta) / 2 = 1/2, so d > 2 n r.
    const double r = 0.5;
    const double d = n == 1 ? 1.5 : 2.5;
    const SeqSpaceParams params_b(HerzParams::uniform(n, 2.0, 0.2, 2.0), 0.5, 2.0, SeqFamily::b);
    const SeqSpaceParams params_f(HerzParams::uniform(n, 2.0, 0.2, 2.0), 0.5, 2.0, SeqFamily::f);
    EnsembleConfig cfg;
    cfg.seed = 808;
    Rng rng(cfg.seed + static_cast<std::uint64_t>(n));
    const int W = default_star_window(n);
    const int draws = n == 1 ? 100 : 40;
    for (const SeqSpaceParams* params : {&params_b, &params_f}) {
      double c1 = 0.0;
      double c2 = 0.0;
      Rng local = rng;
      for (int i = 0; i < draws; ++i) {
        const CoeffSeq lambda = random_coefficients(n, 3, cfg, local);
        const double base = seq_norm(lambda, *params);
        if (base == 0.0) continue;
        const double s1 = seq_norm(lambda_star(lambda, r, d, W), *params);
        const double s2 = seq_norm(lambda_star(lambda, r, d, 2 * W), *params);
        lower_ok = lower_ok && base <= s1 && base <= s2;
        c1 = std::max(c1, s1 / base);
        c2 = std::max(c2, s2 / base);
      }
      const double shift = std::abs(c2 / c1 - 1.0);
      worst_shift = std::max(worst_shift, shift);
      constants += (constants.empty() ? "" : ", ") + std::to_string(n) + "d " +
                   (params->family == SeqFamily::b ? "b" : "f") + " C=" + fmt(c1);
      add_row(o.report, std::to_string(n) + "d C(W)", c1);
      add_row(o.report, std::to_string(n) + "d C(2W)", c2);
    }
  }
  o.pass = lower_ok && worst_shift <= kStarStability;
  o.detail = std::string("lower bound with constant 1 ") + (lower_ok ? "holds" : "FAILS") +
             "; max |C(2W)/C(W) - 1| = " + fmt(worst_shift) + " (tol " + fmt(kStarStability) + "); " + constants;
  return o;
}

struct NamedSpec {
  std::string name;
  EmbeddingSpec spec;
};

std::vector<NamedSpec> embedding_specs() {
  std::vector<NamedSpec> specs;
  const HerzParams src1(vec({1.0}), vec({0.25}), vec({2.0}));
  const HerzParams tgt1(vec({2.0}), vec({0.0}), vec({2.0}));
  specs.push_back({"sobolev-1d", make_sobolev_spec(src1, vec({2.0}), vec({0.0}), 1.0, 2.0, 2.0)});
  specs.push_back({"jawerth-1d", make_jawerth_spec(src1, tgt1, 1.0, 2.0)});
  specs.push_back({"franke-1d", make_franke_spec(src1, HerzParams(vec({2.0}), vec({0.0}), vec({2.0})), 1.0, 2.0)});
  const HerzParams src2(vec({1.0, 1.5}), vec({0.0, 0.25}), vec({2.0, 2.0}));
  const HerzParams tgt2(vec({2.0, 3.0}), vec({0.0, 0.0}), vec({2.0, 2.0}));
  specs.push_back({"sobolev-2d", make_sobolev_spec(src2, vec({2.0, 3.0}), vec({0.0, 0.0}), 2.0, 2.0, 2.0)});
  specs.push_back({"jawerth-2d", make_jawerth_spec(src2, tgt2, 2.0, 2.0)});
  specs.push_back({"franke-2d", make_franke_spec(src2, tgt2, 2.0, 2.0)});
  return specs;
}

// 9
Outcome embeddings() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<double> Ks{4, 6, 8};
  EnsembleConfig cfg;
  cfg.size = 1000;
  cfg.seed = 909;
  double worst_conforming = -kInf;
  double weakest_control = kInf;
  std::string per_spec;
  for (const NamedSpec& named : embedding_specs()) {
    for (bool control : {false, true}) {
      const EmbeddingSpec spec = control ? make_control(named.spec) : named.spec;
      std::vector<double> ys;
      for (double K : Ks) {
        const EnsembleStats stats = seq_embedding_check(spec, static_cast<int>(K), cfg);
        ys.push_back(std::log2(stats.max_ratio));
        add_row(o.report, named.name + (control ? " control" : "") + " K=" + format_double(K), stats.max_ratio);
      }
      const double slope = fit_slope(Ks, ys);
      if (control) per_spec += (per_spec.empty() ? "" : ", ") + named.name + " " + fmt(slope);
      if (control) {
        weakest_control = std::min(weakest_control, slope);
      } else {
        worst_conforming = std::max(worst_conforming, slope);
      }
    }
  }
  const double t = seconds_since(t0);
  o.pass = worst_conforming <= kSlopeTol && weakest_control >= kControlSlope && t <= kEmbeddingSeconds;
  o.detail = "6 specs (Sobolev/Jawerth/Franke, 1D and 2D), 1000 draws, K in {4,6,8}: max conforming log-slope " +
             fmt(worst_conforming) + " (tol " + fmt(kSlopeTol) + "), min control log-slope " + fmt(weakest_control) +
             " (need >= " + fmt(kControlSlope) + ") [" + per_spec + "], " + fmt(t) + " s (limit " + fmt(kEmbeddingSeconds) + " s)";
  return o;
}

// 10
Outcome necessity() {
  Outcome o;
  double worst = 0.0;
  std::string fitted;
  const GridShape line(1, 32.0, 512);
  const GridShape plane(2, 16.0, 128);
  struct Case {
    double c;
    bool two_d;
  };
  for (const Case& cs : {Case{-0.5, false}, Case{-0.25, true}, Case{0.0, false}, Case{0.25, true}, Case{0.5, false}}) {
    const int n = cs.two_d ? 2 : 1;
    const HerzParams src = cs.two_d ? HerzParams(vec({1.0, 2.0}), vec({0.25, 0.0}), vec({2.0, 2.0}))
                                    : HerzParams::uniform(1, 1.0, 0.25, 2.0);
    const HerzParams tgt = cs.two_d ? HerzParams(vec({2.0, 2.0}), vec({0.0, 0.0}), vec({1.0, 2.0}))
                                    : HerzParams::uniform(1, 2.0, 0.0, 1.0);
    const double s2 = 1.0;
    const double s1 = s2 - src.inv_p_sum() - src.alpha_sum() + tgt.inv_p_sum() + tgt.alpha_sum() + cs.c;
    const NecessityFit fit = necessity_fit(SpaceParams(src, s2, 2.0, Family::B), SpaceParams(tgt, s1, 2.0, Family::B),
                                           n == 1 ? line : plane, n == 1 ? 4 : 3, 1010);
    worst = std::max(worst, std::abs(fit.c - cs.c));
    fitted += (fitted.empty() ? "" : ", ") + fmt(fit.c);
    add_row(o.report, "c=" + format_double(cs.c), fit.c);
  }
  o.pass = worst <= kFitTol;
  o.detail = "fitted c = [" + fitted + "] for predicted [-1/2, -1/4, 0, 1/4, 1/2]; max error " + fmt(worst) + " (tol " +
             fmt(kFitTol) + ")";
  return o;
}

// 11
Outcome ppn() {
  Outcome o;
  const GridShape line(1, 32.0, 512);
  const GridShape plane(2, 16.0, 128);
  double worst = 0.0;
  const PpnFit a = ppn_check(HerzParams::uniform(1, 1.0, 0.0, 2.0), HerzParams::uniform(1, 2.0, 0.0, 2.0), line, 4, 1111);
  const PpnFit b = ppn_check(HerzParams::uniform(1, 2.0, 0.5, 1.0), HerzParams::uniform(1, 2.0, 0.0, 2.0), line, 4, 1111);
  const PpnFit c = ppn_check(HerzParams(vec({1.0, 2.0}), vec({0.25, 0.0}), vec({1.0, 2.0})),
                             HerzParams(vec({4.0, 2.0}), vec({0.0, 0.0}), vec({2.0, 2.0})), plane, 3, 1111);
  std::string slopes;
  for (const PpnFit* f : {&a, &b, &c}) {
    worst = std::max(worst, std::abs(f->slope));
    slopes += (slopes.empty() ? "" : ", ") + fmt(f->slope);
  }
  o.pass = worst <= kFitTol;
  o.detail = "fitted slopes [" + slopes + "] (tol |slope| <= " + fmt(kFitTol) + ")";
  return o;
}

// 12
Outcome hardy() {
  Outcome o;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    for (double q : {0.5, 1.0, 2.0, kInf}) {
      const HardyStats stats = hardy_check(a, q, 100, 1212);
      worst = std::max(worst, stats.max_ratio / stats.constant);
      add_row(o.report, "a=" + format_double(a) + " q=" + format_double(q), stats.max_ratio);
    }
  }
  o.pass = worst <= 1.0 + kHardyRounding;
  o.detail = "max ratio / C(a,q) over 12 (a,q) pairs, 100 draws each: " + fmt(worst) + " (must be <= 1, rounding " +
             fmt(kHardyRounding) + ")";
  return o;
}

const char* kMaximalConfig = R"([grid]
n = 1
L = 16

[source]
p = 2
alpha = 1/4
q = 2

[run]
G = 256, 512, 1024
beta = 2
t = 1/2

[ensemble]
size = 16
seed = 1313
)";

// 13
Outcome maximal() {
  Outcome o;
  o.report = run_experiment("maximal-check", ExperimentConfig::parse(kMaximalConfig), std::nullopt);
  double slope = kInf;
  for (const auto& [k, v] : o.report.meta) {
    if (k == "log_ratio_slope") slope = parse_double(v);
  }
  std::string ratios;
  for (const Record& r : o.report.records) ratios += (ratios.empty() ? "" : ", ") + fmt(std::get<double>(r.fields[1].second));
  o.pass = std::abs(slope) <= kSlopeTol;
  o.detail = "16-member cube families, G in {256,512,1024}: ratios [" + ratios + "], log-slope " + fmt(slope) + " (tol " +
             fmt(kSlopeTol) + ")";
  return o;
}

const char* kSweepConfig = R"([source]
p = 1
alpha = 1/4
q = 2
s = 1
beta = 2

[target]
p = 2
alpha = 0
q = 2

[run]
theorem = jawerth
K = 4, 6

[ensemble]
size = 200
seed = 1414
)";

const char* kHardyConfig = R"([run]
a = 1/4, 1/2, 3/4
q = 1/2, 1, 2, inf

[ensemble]
size = 100
seed = 1415
)";

// 14
Outcome determinism(const std::map<int, std::function<Outcome()>>& ensembles, const std::map<int, std::string>& first) {
  Outcome o;
  std::string mismatched;
  for (const auto& [id, run] : ensembles) {
    if (render_json(run().report) != first.at(id)) mismatched += " " + std::to_string(id);
  }
  for (const auto& [command, text] :
       {std::pair<std::string, const char*>{"embed-sweep", kSweepConfig}, {"hardy-check", kHardyConfig}}) {
    const ExperimentConfig config = ExperimentConfig::parse(text);
    const std::string a = render_json(run_experiment(command, config, std::nullopt));
    const std::string b = render_json(run_experiment(command, ExperimentConfig::parse(text), std::nullopt));
    if (a != b || render_csv(run_experiment(command, ExperimentConfig::parse(text), std::nullopt).records) !=
                      render_csv(run_experiment(command, ExperimentConfig::parse(text), std::nullopt).records)) {
      mismatched += " " + command;
    }
  }
  o.pass = mismatched.empty();
  o.detail = "reruns of criteria 4-9, 12, 13 and of embed-sweep / hardy-check reports are " +
             std::string(mismatched.empty() ? "byte-identical" : "DIFFERENT:" + mismatched);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto selected = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, coincidence},         {2, dilation_law}, {3, partition},  {4, round_trip}, {5, constant_one},
      {6, explicit_constant},   {7, exact_sequence_norms},          {8, lambda_star_check},
      {9, embeddings},          {10, necessity},   {11, ppn},       {12, hardy},     {13, maximal}};
  const std::map<int, const char*> names{
      {1, "Herz/Lebesgue coincidence"}, {2, "dilation law"},          {3, "Calderon identity and partition of unity"},
      {4, "phi-transform round trip"},  {5, "constant-1 embeddings"}, {6, "explicit-constant embedding"},
      {7, "exact sequence norms"},      {8, "lambda-star majorant"},  {9, "discrete Sobolev/Jawerth/Franke"},
      {10, "necessity exponent"},       {11, "PPN sharpness"},        {12, "Hardy lemma"},
      {13, "vector-valued maximal check"}, {14, "determinism"}};
  const std::vector<int> ensemble_ids{4, 5, 6, 7, 8, 9, 12, 13};

  int failures = 0;
  std::map<int, std::function<Outcome()>> ensembles;
  std::map<int, std::string> first;
  auto report_line = [&](int id, const Outcome& o) {
    std::printf("%s criterion %2d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, names.at(id), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  for (const auto& [id, run] : criteria) {
    if (!selected(id)) continue;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    report_line(id, o);
    if (std::find(ensemble_ids.begin(), ensemble_ids.end(), id) != ensemble_ids.end()) {
      ensembles[id] = run;
      first[id] = render_json(o.report);
    }
  }
  if (!selected(14)) return failures == 0 ? 0 : 1;
  Outcome det;
  try {
    det = determinism(ensembles, first);
  } catch (const std::exception& e) {
    det.detail = std::string("exception: ") + e.what();
  }
  report_line(14, det);
  return failures == 0 ? 0 : 1;
}
