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

#include "herzlab/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "herzlab/embedlab.hpp"
#include "herzlab/frames.hpp"
#include "herzlab/maximal.hpp"
#include "herzlab/seqspace.hpp"
#include "herzlab/spaces.hpp"

namespace herzlab {

double parse_number(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ' && c != '\t') text += c;
  }
  require(!text.empty(), "empty number");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_double(text);
  const double num = parse_double(text.substr(0, slash));
  const double den = parse_double(text.substr(slash + 1));
  require(den != 0.0, "zero denominator in '" + raw + "'");
  return num / den;
}

ExperimentConfig ExperimentConfig::parse(const std::string& text, const std::string& base_dir) {
  ExperimentConfig config;
  config.text_ = text;
  config.base_dir_ = base_dir;
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw Error("config parse error at line " + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      config.values_[name] = node.data();
      continue;
    }
    for (const auto& [key, leaf] : node) config.values_[name + "." + key] = leaf.data();
  }
  return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto parent = std::filesystem::path(path).parent_path();
  return parse(buffer.str(), parent.empty() ? "." : parent.string());
}

bool ExperimentConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string ExperimentConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  require(it != values_.end(), "missing config key '" + key + "'");
  read_.insert(key);
  return it->second;
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

double ExperimentConfig::number(const std::string& key) const {
  try {
    return parse_number(get(key));
  } catch (const Error& e) {
    throw Error("config key '" + key + "': " + e.what());
  }
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

long long ExperimentConfig::integer(const std::string& key) const {
  const double v = number(key);
  require(v == std::floor(v) && std::abs(v) < 9e15, "config key '" + key + "' must be an integer");
  return static_cast<long long>(v);
}

long long ExperimentConfig::integer(const std::string& key, long long fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::vector<double> ExperimentConfig::numbers(const std::string& key) const {
  std::string text = get(key);
  for (char& c : text) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(text);
  std::vector<double> out;
  std::string word;
  while (in >> word) {
    try {
      out.push_back(parse_number(word));
    } catch (const Error& e) {
      throw Error("config key '" + key + "': " + e.what());
    }
  }
  require(!out.empty(), "config key '" + key + "' holds no numbers");
  return out;
}

std::vector<double> ExperimentConfig::numbers(const std::string& key, std::size_t n) const {
  std::vector<double> v = numbers(key);
  if (v.size() == 1) v.assign(n, v.front());
  require(v.size() == n, "config key '" + key + "' needs 1 or " + std::to_string(n) + " values");
  return v;
}

bool ExperimentConfig::flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get(key);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error("config key '" + key + "' must be true or false");
}

std::string ExperimentConfig::path(const std::string& key) const {
  const std::filesystem::path p(get(key));
  return p.is_absolute() ? p.string() : (std::filesystem::path(base_dir_) / p).string();
}

std::vector<std::string> ExperimentConfig::unused() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : values_) {
    if (!read_.count(key)) out.push_back(key);
  }
  return out;
}

namespace {

Eigen::ArrayXd to_array(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Index>(v.size()));
}

std::string list_text(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_double(v[i]);
  return s;
}

struct Context {
  const ExperimentConfig& config;
  std::optional<std::uint64_t> seed_override;
  Report report;

  void meta(const std::string& key, const std::string& value) { report.meta.emplace_back(key, value); }
  void meta(const std::string& key, double value) { meta(key, format_double17(value)); }
  void meta_int(const std::string& key, long long value) { meta(key, std::to_string(value)); }

  std::uint64_t seed() {
    std::uint64_t s = 0;
    if (seed_override) {
      s = *seed_override;
    } else {
      require(config.has("ensemble.seed"), "seed is mandatory for this command: set [ensemble] seed or --seed");
      const std::string text = config.get("ensemble.seed");
      try {
        std::size_t used = 0;
        s = std::stoull(text, &used);
        require(used == text.size(), "");
      } catch (...) {
        throw Error("[ensemble] seed must be an unsigned 64-bit integer");
      }
    }
    meta("seed", std::to_string(s));
    return s;
  }

  GridShape grid() {
    const int n = static_cast<int>(config.integer("grid.n"));
    require(n >= 1 && n <= 3, "[grid] n must be 1, 2 or 3");
    const GridShape shape(n, config.number("grid.L"), static_cast<Index>(config.integer("grid.G")));
    meta_int("grid.n", shape.n);
    meta("grid.L", shape.L);
    meta_int("grid.G", shape.G);
    return shape;
  }

  int dim(const std::string& section) {
    if (config.has("grid.n")) return static_cast<int>(config.integer("grid.n"));
    return static_cast<int>(config.numbers(section + ".p").size());
  }

  HerzParams herz(const std::string& section, int n) {
    const auto p = config.numbers(section + ".p", static_cast<std::size_t>(n));
    const auto alpha = config.has(section + ".alpha") ? config.numbers(section + ".alpha", static_cast<std::size_t>(n))
                                                      : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    const auto q = config.numbers(section + ".q", static_cast<std::size_t>(n));
    try {
      return HerzParams(to_array(p), to_array(alpha), to_array(q));
    } catch (const Error& e) {
      throw Error("[" + section + "] " + e.what());
    }
  }

  SpaceParams space(const std::string& section, int n) {
    const std::string family = config.get(section + ".family", "B");
    require(family == "B" || family == "F", "[" + section + "] family must be B or F");
    try {
      return SpaceParams(herz(section, n), config.number(section + ".s", 0.0), config.number(section + ".beta", 2.0),
                         family == "B" ? Family::B : Family::F);
    } catch (const Error& e) {
      throw Error("[" + section + "] " + e.what());
    }
  }

  SeqSpaceParams seq_space(const std::string& section, int n, const std::string& default_family) {
    const std::string family = config.get(section + ".family", default_family);
    require(family == "b" || family == "f", "[" + section + "] family must be b or f");
    try {
      return SeqSpaceParams(herz(section, n), config.number(section + ".s", 0.0),
                            config.number(section + ".beta", 2.0), family == "b" ? SeqFamily::b : SeqFamily::f);
    } catch (const Error& e) {
      throw Error("[" + section + "] " + e.what());
    }
  }

  DilationMode mode() {
    const std::string m = config.get("run.mode", "co-dilated");
    meta("run.mode", m);
    if (m == "co-dilated") return DilationMode::co_dilated;
    if (m == "fixed") return DilationMode::fixed_grid;
    throw Error("[run] mode must be co-dilated or fixed");
  }

  SampledField field(const GridShape& shape) {
    const std::string kind = config.get("field.kind", "zero");
    meta("field.kind", kind);
    if (kind == "zero") return SampledField(shape);
    if (kind == "witness") {
      const int N = static_cast<int>(config.integer("field.N", 0));
      return bandlimited_witness(shape, N, seed());
    }
    if (kind == "random") {
      const double radius = config.number("field.radius", 0.5 * shape.max_frequency());
      meta("field.radius", radius);
      Rng rng(seed());
      return random_bandlimited_field(shape, radius, rng);
    }
    if (kind == "cube") {
      const auto m = config.numbers("field.m", static_cast<std::size_t>(shape.n));
      LatticePoint point{0, 0, 0};
      for (int i = 0; i < shape.n; ++i) point[i] = static_cast<std::int64_t>(m[static_cast<std::size_t>(i)]);
      return cube_indicator(shape, static_cast<int>(config.integer("field.v", 0)), point);
    }
    if (kind == "snapshot") {
      SampledField f = load_field_snapshot(config.path("field.path"));
      require(f.shape() == shape, "snapshot grid differs from [grid]");
      return f;
    }
    throw Error("[field] kind must be zero, witness, random, cube or snapshot");
  }

  void truncation(const GridShape& shape) {
    const DyadicGeometry geo = DyadicGeometry::of(shape);
    meta_int("truncation.k_min", geo.k_min);
    meta_int("truncation.k_max", geo.k_max);
    meta("truncation.inner_tail", "closed-form");
  }
};

Record quantity(const std::string& name, int level, double value) {
  Record r;
  r.add("quantity", name).add("level", level).add("value", value);
  return r;
}

void run_norm(Context& ctx) {
  const GridShape shape = ctx.grid();
  ctx.truncation(shape);
  const SampledField f = ctx.field(shape);
  const HerzParams params = ctx.herz("source", shape.n);
  ctx.meta("source", params.describe());
  ctx.report.records.push_back(quantity("herz_norm", -1, mixed_herz_norm(f, params)));
  ctx.report.records.push_back(quantity("lebesgue_norm", -1, mixed_lebesgue_norm(f, params.p)));
  if (ctx.config.has("source.family")) {
    const SpaceParams space = ctx.space("source", shape.n);
    const int K = static_cast<int>(ctx.config.integer("run.K", max_resolution_level(shape)));
    ctx.meta_int("truncation.K", K);
    const SpectralSystem system = build_resolution(shape, K);
    ctx.report.records.push_back(quantity("space_norm", -1, space_norm(f, space, system)));
  }
}

SpectralSystem configured_system(Context& ctx, const GridShape& shape, const std::string& fallback) {
  const std::string kind = ctx.config.get("run.system", fallback);
  ctx.meta("run.system", kind);
  if (kind == "resolution") {
    const int K = static_cast<int>(ctx.config.integer("run.K", max_resolution_level(shape)));
    ctx.meta_int("truncation.K", K);
    return build_resolution(shape, K);
  }
  if (kind == "fj") {
    const int K = static_cast<int>(ctx.config.integer("run.K", max_fj_level(shape)));
    ctx.meta_int("truncation.K", K);
    return build_fj_pair(shape, K);
  }
  throw Error("[run] system must be resolution or fj");
}

void run_decompose(Context& ctx) {
  const GridShape shape = ctx.grid();
  ctx.truncation(shape);
  const SampledField f = ctx.field(shape);
  const HerzParams params = ctx.herz("source", shape.n);
  ctx.meta("source", params.describe());
  const SpectralSystem system = configured_system(ctx, shape, "resolution");
  const auto blocks = lp_blocks(f, system);
  SampledField sum(shape);
  for (int k = 0; k <= system.levels(); ++k) {
    const SampledField& b = blocks[static_cast<std::size_t>(k)];
    ctx.report.records.push_back(quantity("block_l2", k, b.l2_norm()));
    ctx.report.records.push_back(quantity("block_herz", k, mixed_herz_norm(b, params)));
    sum += b;
  }
  sum.values() -= f.values();
  ctx.report.records.push_back(quantity("partition_residual_l2", -1, sum.l2_norm()));
}

void run_phitransform(Context& ctx) {
  const GridShape shape = ctx.grid();
  ctx.truncation(shape);
  const SampledField f = ctx.field(shape);
  const int K = static_cast<int>(ctx.config.integer("run.K", max_fj_level(shape)));
  ctx.meta_int("truncation.K", K);
  const SpectralSystem system = build_fj_pair(shape, K);
  const CoeffSeq coeffs = analyze(f, system);
  for (int k = 0; k <= K; ++k) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& [key, value] : coeffs.entries()) {
      if (key.level != k) continue;
      sum += std::norm(value);
      ++count;
    }
    ctx.report.records.push_back(quantity("entries", k, static_cast<double>(count)));
    ctx.report.records.push_back(quantity("coeff_l2", k, std::sqrt(sum)));
  }
  if (f.l2_norm() > 0.0) ctx.report.records.push_back(quantity("roundtrip_error", -1, roundtrip_error(f, system)));
  if (ctx.config.has("run.coeffs_out")) save_coefficients(ctx.config.path("run.coeffs_out"), coeffs);
}

void run_seqnorm(Context& ctx) {
  const int n = ctx.dim("source");
  const SeqSpaceParams params = ctx.seq_space("source", n, "b");
  ctx.meta("source", params.describe());
  CoeffSeq coeffs(n, 0);
  if (ctx.config.has("run.coeffs")) {
    coeffs = load_coefficients(ctx.config.path("run.coeffs"));
    ctx.meta("run.coeffs", ctx.config.get("run.coeffs"));
  } else {
    EnsembleConfig ens;
    ens.window = ctx.config.number("ensemble.window", ens.window);
    ens.sparsity = ctx.config.number("ensemble.sparsity", ens.sparsity);
    ens.spike_fraction = ctx.config.number("ensemble.spike_fraction", ens.spike_fraction);
    const int K = static_cast<int>(ctx.config.integer("run.K", 4));
    ctx.meta_int("truncation.K", K);
    ctx.meta("ensemble.window", ens.window);
    ctx.meta("ensemble.sparsity", ens.sparsity);
    ctx.meta("ensemble.spike_fraction", ens.spike_fraction);
    Rng rng(ctx.seed());
    coeffs = random_coefficients(n, K, ens, rng);
  }
  ctx.report.records.push_back(quantity("entries", -1, static_cast<double>(coeffs.size())));
  ctx.report.records.push_back(quantity("norm", -1, seq_norm(coeffs, params)));
  if (ctx.config.has("run.r")) {
    const double r = ctx.config.number("run.r");
    const double d = ctx.config.number("run.d");
    const int W = static_cast<int>(ctx.config.integer("run.window", default_star_window(n)));
    ctx.meta_int("truncation.W", W);
    ctx.report.records.push_back(quantity("lambda_star_norm", -1, seq_norm(lambda_star(coeffs, r, d, W), params)));
  }
}

void run_embed_sweep(Context& ctx) {
  const int n = ctx.dim("source");
  const std::string theorem = ctx.config.get("run.theorem");
  const HerzParams src = ctx.herz("source", n);
  const double s2 = ctx.config.number("source.s", 0.0);
  const double theta = ctx.config.number("source.beta", 2.0);
  EmbeddingSpec spec;
  if (theorem == "sobolev") {
    const auto p = ctx.config.numbers("target.p", static_cast<std::size_t>(n));
    const auto alpha = ctx.config.has("target.alpha") ? ctx.config.numbers("target.alpha", static_cast<std::size_t>(n))
                                                      : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    spec = make_sobolev_spec(src, to_array(p), to_array(alpha), s2, theta, ctx.config.number("target.beta", 2.0));
  } else if (theorem == "jawerth") {
    spec = make_jawerth_spec(src, ctx.herz("target", n), s2, theta);
  } else if (theorem == "franke") {
    spec = make_franke_spec(src, ctx.herz("target", n), s2, ctx.config.number("target.beta", 2.0));
  } else {
    throw Error("[run] theorem must be sobolev, jawerth or franke");
  }
  if (ctx.config.flag("run.control", false)) spec = make_control(spec, ctx.config.number("run.control_shift", 0.25));
  ctx.meta("spec", spec.describe());
  EnsembleConfig ens;
  ens.size = static_cast<std::size_t>(ctx.config.integer("ensemble.size", 1000));
  ens.window = ctx.config.number("ensemble.window", ens.window);
  ens.sparsity = ctx.config.number("ensemble.sparsity", ens.sparsity);
  ens.spike_fraction = ctx.config.number("ensemble.spike_fraction", ens.spike_fraction);
  ens.seed = ctx.seed();
  ctx.meta("ensemble.size", std::to_string(ens.size));
  ctx.meta("ensemble.window", ens.window);
  ctx.meta("ensemble.sparsity", ens.sparsity);
  ctx.meta("ensemble.spike_fraction", ens.spike_fraction);
  const auto Ks = ctx.config.numbers("run.K");
  ctx.meta("truncation.K", list_text(Ks));
  std::vector<double> xs;
  std::vector<double> ys;
  for (double Kd : Ks) {
    const int K = static_cast<int>(Kd);
    const EnsembleStats stats = seq_embedding_check(spec, K, ens);
    Record r;
    r.add("K", K).add("draws", stats.count).add("min_ratio", stats.min_ratio).add("max_ratio", stats.max_ratio);
    ctx.report.records.push_back(r);
    xs.push_back(K);
    ys.push_back(std::log2(stats.max_ratio));
  }
  if (xs.size() >= 2) ctx.meta("log2_max_ratio_slope", fit_slope(xs, ys));
}

void run_necessity(Context& ctx) {
  const GridShape base = ctx.grid();
  const SpaceParams source = ctx.space("source", base.n);
  const SpaceParams target = ctx.space("target", base.n);
  ctx.meta("source", source.describe());
  ctx.meta("target", target.describe());
  const int N_max = static_cast<int>(ctx.config.integer("run.N_max", 4));
  ctx.meta_int("run.N_max", N_max);
  const DilationMode mode = ctx.mode();
  const NecessityFit fit = necessity_fit(source, target, base, N_max, ctx.seed(), mode);
  ctx.meta("fitted_c", fit.c);
  ctx.meta("predicted_c", fit.predicted);
  for (std::size_t N = 0; N < fit.ratios.size(); ++N) {
    Record r;
    r.add("N", N).add("ratio", fit.ratios[N]);
    ctx.report.records.push_back(r);
  }
}

void run_ppn(Context& ctx) {
  const GridShape base = ctx.grid();
  const HerzParams source = ctx.herz("source", base.n);
  const HerzParams target = ctx.herz("target", base.n);
  ctx.meta("source", source.describe());
  ctx.meta("target", target.describe());
  const int N_max = static_cast<int>(ctx.config.integer("run.N_max", 4));
  ctx.meta_int("run.N_max", N_max);
  const DilationMode mode = ctx.mode();
  const PpnFit fit = ppn_check(source, target, base, N_max, ctx.seed(), mode);
  ctx.meta("gamma", fit.gamma);
  ctx.meta("fitted_slope", fit.slope);
  for (std::size_t N = 0; N < fit.ratios.size(); ++N) {
    Record r;
    r.add("N", N).add("ratio", fit.ratios[N]);
    ctx.report.records.push_back(r);
  }
}

void run_maximal(Context& ctx) {
  const int n = static_cast<int>(ctx.config.integer("grid.n", 1));
  const double L = ctx.config.number("grid.L", 16.0);
  const auto Gs = ctx.config.numbers("run.G");
  const HerzParams params = ctx.herz("source", n);
  const double beta = ctx.config.number("run.beta", 2.0);
  const double t = ctx.config.number("run.t", 0.5);
  const std::size_t size = static_cast<std::size_t>(ctx.config.integer("ensemble.size", 16));
  ctx.meta("source", params.describe());
  ctx.meta("run.beta", beta);
  ctx.meta("run.t", t);
  ctx.meta("grid.L", L);
  ctx.meta_int("grid.n", n);
  ctx.meta("run.G", list_text(Gs));
  ctx.meta("ensemble.size", std::to_string(size));
  const std::uint64_t seed = ctx.seed();
  std::vector<double> xs;
  std::vector<double> ys;
  for (double Gd : Gs) {
    const GridShape shape(n, L, static_cast<Index>(Gd));
    Rng rng(seed);
    std::vector<SampledField> family;
    const int coarse = static_cast<int>(std::floor(std::log2(L / 8.0)));
    for (std::size_t j = 0; j < size; ++j) {
      const int v = -coarse + static_cast<int>(rng.below(3));
      const double side = std::ldexp(1.0, -v);
      const auto cells = static_cast<std::int64_t>(std::llround(L / 4.0 / side));
      LatticePoint m{0, 0, 0};
      for (int i = 0; i < n; ++i) m[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cells))) - cells / 2;
      const double amplitude = 1.0 / std::sqrt(rng.uniform_open());
      family.push_back(Complex(amplitude) * cube_indicator(shape, v, m));
    }
    const double ratio = fs_vector_check(family, params, beta, t);
    Record r;
    r.add("G", static_cast<int>(Gd)).add("ratio", ratio);
    ctx.report.records.push_back(r);
    xs.push_back(std::log2(Gd));
    ys.push_back(std::log2(ratio));
  }
  if (xs.size() >= 2) ctx.meta("log_ratio_slope", fit_slope(xs, ys));
}

void run_hardy(Context& ctx) {
  const auto as = ctx.config.numbers("run.a");
  const auto qs = ctx.config.numbers("run.q");
  const std::size_t size = static_cast<std::size_t>(ctx.config.integer("ensemble.size", 100));
  const std::size_t length = static_cast<std::size_t>(ctx.config.integer("run.length", 16));
  ctx.meta("ensemble.size", std::to_string(size));
  ctx.meta("run.length", std::to_string(length));
  const std::uint64_t seed = ctx.seed();
  for (double a : as) {
    for (double q : qs) {
      const HardyStats stats = hardy_check(a, q, size, seed, length);
      Record r;
      r.add("a", a).add("q", q).add("max_ratio", stats.max_ratio).add("constant", stats.constant);
      ctx.report.records.push_back(r);
    }
  }
}

}  // namespace

Report run_experiment(const std::string& command, const ExperimentConfig& config, std::optional<std::uint64_t> seed) {
  Context ctx{config, seed, {}};
  ctx.meta("version", kVersion);
  ctx.meta("command", command);
  ctx.meta("config", config.text());
  if (config.has("command")) {
    require(config.get("command") == command, "config command '" + config.get("command") + "' differs from '" + command + "'");
  }
  if (command == "norm") {
    run_norm(ctx);
  } else if (command == "decompose") {
    run_decompose(ctx);
  } else if (command == "phitransform") {
    run_phitransform(ctx);
  } else if (command == "seqnorm") {
    run_seqnorm(ctx);
  } else if (command == "embed-sweep") {
    run_embed_sweep(ctx);
  } else if (command == "necessity") {
    run_necessity(ctx);
  } else if (command == "ppn-check") {
    run_ppn(ctx);
  } else if (command == "maximal-check") {
    run_maximal(ctx);
  } else if (command == "hardy-check") {
    run_hardy(ctx);
  } else {
    throw Error("unknown command '" + command + "'");
  }
  config.get("output.path", "");
  config.get("output.format", "");
  const auto unused = config.unused();
  if (!unused.empty()) {
    std::string list;
    for (const auto& k : unused) list += (list.empty() ? "" : ", ") + k;
    throw Error("unknown config keys for command '" + command + "': " + list);
  }
  return ctx.report;
}

int run_config(const std::string& command, const std::string& config_path, const std::optional<std::string>& out,
               std::optional<std::uint64_t> seed, std::ostream& err) {
  try {
    const ExperimentConfig config = ExperimentConfig::load(config_path);
    const Report report = run_experiment(command, config, seed);
    std::string path;
    if (out) {
      path = *out;
    } else {
      require(config.has("output.path"), "no output path: set [output] path or --out");
      path = config.path("output.path");
    }
    std::string format = config.get("output.format", "");
    if (format.empty()) format = path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? "csv" : "json";
    emit_report(report, parse_report_format(format), path);
    return 0;
  } catch (const std::exception& e) {
    err << "herzlab: error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace herzlab
