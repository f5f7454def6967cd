// Copyright 2026 The famtree authors
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

#include "famtree/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <ostream>
#include <vector>

#include "famtree/engine.hpp"
#include "famtree/experiment.hpp"
#include "famtree/limit_laws.hpp"
#include "famtree/rng.hpp"
#include "famtree/special.hpp"
#include "famtree/stats.hpp"
#include "famtree/urn.hpp"

namespace famtree {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// Scaled sizes and widened statistical tolerances for --quick; the
// deterministic identity checks keep their tolerances either way.
struct Budget {
  std::uint64_t big_n;
  std::uint64_t ks_reps;
  std::uint64_t oracle_reps;
  std::uint64_t coloring_reps;
  std::uint64_t urn_draws;
  std::uint64_t perf_n;
  double perf_seconds;
  double ks_root;      // one-sample KS thresholds
  double ks_pair;      // two-sample KS thresholds
  double moment_rel;   // relative tolerance for pinned second moments
  double moment_rel_general;  // relative fallback for the general-beta check

  static Budget make(const ValidateOptions& opt) {
    Budget b;
    double fn = (opt.quick ? 0.2 : 1.0) * opt.scale_n;
    double fr = (opt.quick ? 0.3 : 1.0) * opt.scale_reps;
    auto scaled = [](double base, double f, std::uint64_t floor_v) {
      auto v = static_cast<std::uint64_t>(std::llround(base * f));
      return std::max(v, floor_v);
    };
    b.big_n = scaled(100000, fn, 2000);
    b.ks_reps = scaled(2000, fr, 200);
    b.oracle_reps = scaled(100000, fr, 5000);
    b.coloring_reps = scaled(1000, fr, 200);
    b.urn_draws = scaled(100000, fn, 2000);
    b.perf_n = scaled(1000000, fn, 50000);
    b.perf_seconds = opt.quick ? 0.5 : 1.0;
    b.ks_root = opt.quick ? 0.08 : 0.05;
    b.ks_pair = opt.quick ? 0.10 : 0.06;
    b.moment_rel = opt.quick ? 0.08 : 0.05;
    b.moment_rel_general = opt.quick ? 0.10 : 0.07;
    return b;
  }
};

struct Ctx {
  ValidateOptions opt;
  Budget budget;

  std::uint64_t criterion_seed(int id) const {
    return derive_stream_seed(opt.seed, 1000 + static_cast<std::uint64_t>(id));
  }
};

CriterionResult c1_weight_sum(const Ctx& ctx) {
  CriterionResult r{1, "weight-sum-invariant"};
  std::vector<ModelKind> models = {
      ModelKind::linear_degree(-0.5), ModelKind::linear_degree(0.0),
      ModelKind::linear_degree(1.0), ModelKind::gport(0.5),
      ModelKind::gport(1.0)};
  std::uint64_t n = ctx.budget.big_n;
  std::uint64_t exact_hits = 0;
  std::uint64_t checks = 0;
  double worst = 0.0;
  for (std::size_t m = 0; m < models.size(); ++m) {
    GrowthRun run(models[m], derive_stream_seed(ctx.criterion_seed(1), m));
    run.reserve(n);
    for (int part = 1; part <= 10; ++part) {
      run.grow_to(n * part / 10);
      double lhs = run.state().recomputed_weight_sum();
      double rhs = run.state().total_weight();
      ++checks;
      if (lhs == rhs) ++exact_hits;
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  }
  r.pass = exact_hits == checks;
  r.detail = strf("%llu/%llu checkpoints bit-exact, worst |diff|=%g, n=%llu",
                  static_cast<unsigned long long>(exact_hits),
                  static_cast<unsigned long long>(checks), worst,
                  static_cast<unsigned long long>(n));
  return r;
}

CriterionResult c2_exact_law(const Ctx& ctx) {
  CriterionResult r{2, "small-tree-exact-law"};
  std::vector<ModelKind> models = {ModelKind::linear_degree(0.0),
                                   ModelKind::linear_degree(1.0),
                                   ModelKind::gport(1.0)};
  std::uint64_t reps = ctx.budget.oracle_reps;
  double worst_z = 0.0;
  bool support_ok = true;
  std::string worst_at;
  for (std::size_t m = 0; m < models.size(); ++m) {
    for (std::uint64_t n = 3; n <= 7; ++n) {
      std::map<std::uint32_t, std::uint64_t> hist_root;
      std::map<std::uint32_t, std::uint64_t> hist_child;
      std::uint64_t base =
          derive_stream_seed(ctx.criterion_seed(2), m * 16 + n);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> outcomes(reps);
      parallel_replicates(reps, ctx.opt.threads, [&](std::uint64_t rep) {
        GrowthRun run(models[m], derive_stream_seed(base, rep));
        run.grow_to(n);
        // Vertex 1 is always the root's first child, label (1).
        outcomes[rep] = {run.state().degree(0), run.state().degree(1)};
      });
      for (auto [droot, dchild] : outcomes) {
        ++hist_root[droot];
        ++hist_child[dchild];
      }
      const Label root{};
      const Label child{1};
      for (int which = 0; which < 2; ++which) {
        ExactDistribution exact =
            enumerate_exact(which == 0 ? root : child, n, models[m]);
        auto& hist = which == 0 ? hist_root : hist_child;
        for (const auto& [deg, count] : hist) {
          if (exact.probability(deg) == 0.0) support_ok = false;
        }
        for (const auto& [deg, p] : exact.pmf) {
          double se = std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
          auto it = hist.find(deg);
          double freq = it == hist.end()
                            ? 0.0
                            : static_cast<double>(it->second) / reps;
          double z = se > 0.0 ? std::fabs(freq - p) / se : 0.0;
          if (z > worst_z) {
            worst_z = z;
            worst_at = strf("%s beta=%g n=%llu %s deg=%u",
                            std::string(to_string(models[m].variant)).c_str(),
                            models[m].beta,
                            static_cast<unsigned long long>(n),
                            which == 0 ? "root" : "1", deg);
          }
        }
      }
    }
  }
  r.pass = support_ok && worst_z <= 4.0;
  r.detail = strf("worst z=%.2f (max 4.0) at %s, support %s, reps=%llu",
                  worst_z, worst_at.c_str(), support_ok ? "ok" : "VIOLATED",
                  static_cast<unsigned long long>(reps));
  return r;
}

CriterionResult c3_moment_identities(const Ctx&) {
  CriterionResult r{3, "root-moment-identities"};
  double worst_forms = 0.0;
  for (double beta : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (unsigned k = 0; k <= 8; ++k) {
      double a = zeta0_moment_linear(k, beta);
      double b = zeta0_moment_linear_binomial_form(k, beta);
      worst_forms = std::max(worst_forms, std::fabs(a / b - 1.0));
    }
  }
  // At beta = 0 the even moments of the limit over sqrt(2) are the standard
  // normal ones, (2k-1)!!.
  double worst_normal = 0.0;
  double double_factorial = 1.0;
  for (unsigned k = 1; k <= 4; ++k) {
    double_factorial *= 2 * k - 1;
    double scaled =
        zeta0_moment_linear(2 * k, 0.0) / std::pow(2.0, static_cast<double>(k));
    worst_normal =
        std::max(worst_normal, std::fabs(scaled / double_factorial - 1.0));
  }
  r.pass = worst_forms <= 1e-12 && worst_normal <= 1e-10;
  r.detail = strf("form mismatch %.2e (max 1e-12), normal-moment mismatch "
                  "%.2e (max 1e-10)",
                  worst_forms, worst_normal);
  return r;
}

CriterionResult c4_root_limit_beta0(const Ctx& ctx) {
  CriterionResult r{4, "root-limit-beta0"};
  ExperimentConfig config;
  config.model = ModelKind::linear_degree(0.0);
  config.n = ctx.budget.big_n;
  config.reps = ctx.budget.ks_reps;
  config.seed = ctx.criterion_seed(4);
  config.threads = ctx.opt.threads;
  GrowTable table = run_grow(config);
  std::vector<double> sample = table.normalized_column(0, 0);
  MomentEstimate m2 = empirical_moment(sample, 2);
  KsResult ks = ks_one_sample(
      sample, [&](double t) { return root_limit_cdf(config.model, t); });
  double target = 2.0;
  double tol = ctx.budget.moment_rel * target;
  r.pass = std::fabs(m2.value - target) <= tol &&
           ks.distance < ctx.budget.ks_root;
  r.detail = strf("m2=%.4f (target 2 +-%.3f), ks=%.4f (max %.3f), n=%llu, "
                  "reps=%llu",
                  m2.value, tol, ks.distance, ctx.budget.ks_root,
                  static_cast<unsigned long long>(config.n),
                  static_cast<unsigned long long>(config.reps));
  return r;
}

CriterionResult c5_product_law(const Ctx& ctx) {
  CriterionResult r{5, "product-law-label2-beta0"};
  ExperimentConfig config;
  config.model = ModelKind::linear_degree(0.0);
  config.n = ctx.budget.big_n;
  config.reps = ctx.budget.ks_reps;
  config.watched = {Label{2}};
  config.seed = ctx.criterion_seed(5);
  config.threads = ctx.opt.threads;
  GrowTable table = run_grow(config);
  std::vector<double> sample = table.normalized_column(0, 0);

  RandomStream rng(derive_stream_seed(config.seed, 0xd7a5));
  std::vector<double> reference(config.reps);
  for (double& x : reference) {
    x = sample_limit_special(Label{2}, config.model, rng);
  }
  KsResult ks = ks_two_sample(sample, reference);
  MomentEstimate m2 = empirical_moment(sample, 2);
  double target = limit_moment(Label{2}, 2, config.model);  // 2/3
  double tol = ctx.budget.moment_rel_general * target;
  r.pass = ks.distance < ctx.budget.ks_pair &&
           std::fabs(m2.value - target) <= tol;
  r.detail = strf("ks=%.4f (max %.3f), m2=%.4f (target %.4f +-%.4f), "
                  "n=%llu, reps=%llu",
                  ks.distance, ctx.budget.ks_pair, m2.value, target, tol,
                  static_cast<unsigned long long>(config.n),
                  static_cast<unsigned long long>(config.reps));
  return r;
}

CriterionResult c6_general_beta(const Ctx& ctx) {
  CriterionResult r{6, "general-beta-moments"};
  ExperimentConfig config;
  config.model = ModelKind::linear_degree(1.0);
  config.n = ctx.budget.big_n;
  config.reps = ctx.budget.ks_reps;
  config.watched = {Label{1}, Label{2}, Label{3, 1}};
  config.seed = ctx.criterion_seed(6);
  config.threads = ctx.opt.threads;
  GrowTable table = run_grow(config);
  bool all_ok = true;
  double worst_rel = 0.0;
  std::string worst_at;
  for (std::size_t l = 0; l < config.watched.size(); ++l) {
    std::vector<double> sample = table.normalized_column(0, l);
    for (unsigned k = 1; k <= 2; ++k) {
      MomentEstimate est = empirical_moment(sample, k);
      double target = limit_moment(config.watched[l], k, config.model);
      double err = std::fabs(est.value - target);
      bool ok = err <= 3.0 * est.std_error ||
                err <= ctx.budget.moment_rel_general * target;
      all_ok = all_ok && ok;
      double rel = err / target;
      if (rel > worst_rel) {
        worst_rel = rel;
        worst_at = strf("label %s k=%u: %.4f vs %.4f",
                        format_label(config.watched[l]).c_str(), k, est.value,
                        target);
      }
    }
  }
  r.pass = all_ok;
  r.detail = strf("worst rel err %.3f%% at %s (pass: within 3 SE or %.0f%%), "
                  "n=%llu, reps=%llu",
                  100.0 * worst_rel, worst_at.c_str(),
                  100.0 * ctx.budget.moment_rel_general,
                  static_cast<unsigned long long>(config.n),
                  static_cast<unsigned long long>(config.reps));
  return r;
}

CriterionResult c7_urn_beta_limit(const Ctx& ctx) {
  CriterionResult r{7, "urn-beta-limit"};
  struct Case {
    double a, b;
  };
  std::vector<Case> cases = {{1.0, 1.0}, {2.0, 3.0}};
  std::uint64_t reps = ctx.budget.ks_reps;
  std::uint64_t draws = ctx.budget.urn_draws;
  bool all_ok = true;
  std::string parts;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    std::uint64_t base = derive_stream_seed(ctx.criterion_seed(7), c);
    std::vector<double> fractions(reps);
    parallel_replicates(reps, ctx.opt.threads, [&](std::uint64_t rep) {
      fractions[rep] =
          polya_final_fraction(UrnState{cases[c].a, cases[c].b}, 1.0, draws,
                               derive_stream_seed(base, rep));
    });
    KsResult ks = ks_one_sample(fractions, [&](double x) {
      return beta_cdf(cases[c].a, cases[c].b, x);
    });
    all_ok = all_ok && ks.distance < ctx.budget.ks_root;
    parts += strf("%s(%g,%g): ks=%.4f", c ? ", " : "", cases[c].a, cases[c].b,
                  ks.distance);
  }
  r.pass = all_ok;
  r.detail = strf("%s (max %.3f), reps=%llu, draws=%llu", parts.c_str(),
                  ctx.budget.ks_root, static_cast<unsigned long long>(reps),
                  static_cast<unsigned long long>(draws));
  return r;
}

CriterionResult c8_coloring_urn(const Ctx& ctx) {
  CriterionResult r{8, "coloring-urn-match"};
  ModelKind model = ModelKind::linear_degree(0.0);
  std::uint64_t n = ctx.budget.big_n;
  std::uint64_t reps = ctx.budget.coloring_reps;
  std::uint64_t base = ctx.criterion_seed(8);
  std::vector<double> engine_fraction(reps);
  std::vector<std::uint64_t> increments(reps);
  std::vector<char> active(reps, 0);
  parallel_replicates(reps, ctx.opt.threads, [&](std::uint64_t rep) {
    GrowthRun run(model, derive_stream_seed(base, rep));
    run.reserve(n);
    run.enable_coloring(Label{}, 3);
    run.grow_to(n);
    const ColoringSnapshot& snap = run.coloring();
    active[rep] = snap.active ? 1 : 0;
    if (snap.active) {
      engine_fraction[rep] = snap.parent_fraction();
      increments[rep] = snap.parent_increments;
    }
  });
  std::vector<double> engine_sample;
  std::vector<double> urn_sample;
  std::uint64_t urn_base = derive_stream_seed(base, 0x75726e);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    if (!active[rep]) continue;  // the root never reached three children
    engine_sample.push_back(engine_fraction[rep]);
    // Matched draw count: the urn advances once per tracked-parent
    // increment, starting from the same (1+beta, j-1) split.
    urn_sample.push_back(polya_final_fraction(
        UrnState{1.0, 2.0}, 1.0, increments[rep],
        derive_stream_seed(urn_base, rep)));
  }
  KsResult ks = ks_two_sample(engine_sample, urn_sample);
  r.pass = ks.distance < ctx.budget.ks_pair;
  r.detail = strf("ks=%.4f (max %.3f), %zu/%llu replicates activated, n=%llu",
                  ks.distance, ctx.budget.ks_pair, engine_sample.size(),
                  static_cast<unsigned long long>(reps),
                  static_cast<unsigned long long>(n));
  return r;
}

CriterionResult c9_martingale(const Ctx&) {
  CriterionResult r{9, "degree-martingale"};
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0}) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (std::uint64_t n = 1; n <= 50; ++n) {
        double s_n = static_cast<double>(n) * (1.0 + beta) - 1.0;
        for (std::uint32_t x = 0; x <= 20; ++x) {
          double p = (x + beta) / s_n;
          double expected = p * port_martingale_value(x + 1, n + 1, k, beta) +
                            (1.0 - p) * port_martingale_value(x, n + 1, k, beta);
          double z = port_martingale_value(x, n, k, beta);
          worst = std::max(worst, std::fabs(expected / z - 1.0));
        }
      }
    }
  }
  r.pass = worst <= 1e-12;
  r.detail = strf("worst one-step mismatch %.2e (max 1e-12) over "
                  "x<=20, n<=50, k<=4, beta in {0.5,1,2}",
                  worst);
  return r;
}

CriterionResult c10_port_root(const Ctx& ctx) {
  CriterionResult r{10, "port-root-limit"};
  ExperimentConfig config;
  config.model = ModelKind::gport(1.0);
  config.n = ctx.budget.big_n;
  config.reps = ctx.budget.ks_reps;
  config.seed = ctx.criterion_seed(10);
  config.threads = ctx.opt.threads;
  GrowTable table = run_grow(config);
  std::vector<double> sample = table.normalized_column(0, 0);
  MomentEstimate m2 = empirical_moment(sample, 2);
  KsResult ks = ks_one_sample(
      sample, [&](double t) { return root_limit_cdf(config.model, t); });
  double target = 4.0;
  double tol = ctx.budget.moment_rel * target;
  r.pass = std::fabs(m2.value - target) <= tol &&
           ks.distance < ctx.budget.ks_root;
  r.detail = strf("m2=%.4f (target 4 +-%.3f), ks=%.4f (max %.3f), n=%llu, "
                  "reps=%llu",
                  m2.value, tol, ks.distance, ctx.budget.ks_root,
                  static_cast<unsigned long long>(config.n),
                  static_cast<unsigned long long>(config.reps));
  return r;
}

CriterionResult c11_performance(const Ctx& ctx) {
  CriterionResult r{11, "growth-performance"};
  std::uint64_t n = ctx.budget.perf_n;
  GrowthRun run(ModelKind::linear_degree(0.0), ctx.criterion_seed(11));
  run.reserve(n);
  auto start = std::chrono::steady_clock::now();
  run.grow_to(n);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  std::size_t footprint = run.memory_footprint();
  double bytes_per_vertex = static_cast<double>(footprint) / n;
  r.pass = elapsed.count() < ctx.budget.perf_seconds && bytes_per_vertex <= 64.0;
  r.detail = strf("n=%llu in %.3f s (max %.2f), %.1f bytes/vertex (max 64)",
                  static_cast<unsigned long long>(n), elapsed.count(),
                  ctx.budget.perf_seconds, bytes_per_vertex);
  return r;
}

}  // namespace

bool ValidateReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass; });
}

ValidateReport run_validate(const ValidateOptions& options) {
  Ctx ctx{options, Budget::make(options)};
  std::vector<CriterionResult (*)(const Ctx&)> checks = {
      c1_weight_sum,   c2_exact_law, c3_moment_identities,
      c4_root_limit_beta0, c5_product_law, c6_general_beta,
      c7_urn_beta_limit,   c8_coloring_urn, c9_martingale,
      c10_port_root,       c11_performance};
  ValidateReport report;
  report.criteria.reserve(checks.size());
  for (auto* check : checks) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult result = check(ctx);
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    result.seconds = elapsed.count();
    if (options.inject_failure == result.id) {
      result.pass = false;
      result.detail += " [failure injected for harness testing]";
    }
    report.criteria.push_back(std::move(result));
  }
  return report;
}

bool print_report(std::ostream& out, const ValidateReport& report) {
  int passed = 0;
  for (const CriterionResult& c : report.criteria) {
    if (c.pass) ++passed;
    char line[640];
    std::snprintf(line, sizeof line, "[%s] %02d %-26s %s (%.2fs)\n",
                  c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                  c.detail.c_str(), c.seconds);
    out << line;
  }
  out << passed << "/" << report.criteria.size() << " criteria passed\n";
  return report.all_pass();
}

}  // namespace famtree
