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

#include "famtree/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "famtree/engine.hpp"
#include "famtree/limit_laws.hpp"
#include "famtree/rng.hpp"
#include "famtree/stats.hpp"

namespace famtree {

namespace {

// 17 significant digits round-trip any double through text.
std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<Label> effective_labels(const ExperimentConfig& config) {
  return config.watched.empty() ? std::vector<Label>{Label{}} : config.watched;
}

}  // namespace

double GrowTable::normalized(std::uint64_t rep, std::size_t checkpoint,
                             std::size_t label) const {
  double scale = std::pow(static_cast<double>(checkpoints[checkpoint]),
                          model.scaling_exponent());
  return at(rep, checkpoint, label) / scale;
}

std::vector<double> GrowTable::normalized_column(std::size_t checkpoint,
                                                 std::size_t label) const {
  std::vector<double> column;
  column.reserve(reps);
  for (std::uint64_t r = 0; r < reps; ++r) {
    column.push_back(normalized(r, checkpoint, label));
  }
  return column;
}

void parallel_replicates(std::uint64_t reps, unsigned threads,
                         const std::function<void(std::uint64_t)>& body) {
  std::uint64_t workers = std::max(1u, threads);
  workers = std::min<std::uint64_t>(workers, reps);
  if (workers <= 1) {
    for (std::uint64_t r = 0; r < reps; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t r = w; r < reps; r += workers) body(r);
    });
  }
  for (std::thread& t : pool) t.join();
}

GrowTable run_grow(const ExperimentConfig& config) {
  if (config.reps == 0) throw std::invalid_argument("reps must be >= 1");
  GrowTable table;
  table.model = config.model;
  table.labels = effective_labels(config);
  table.checkpoints = config.checkpoints.empty()
                          ? std::vector<std::uint64_t>{config.n}
                          : config.checkpoints;
  table.reps = config.reps;
  table.seed = config.seed;
  std::size_t block = table.checkpoints.size() * table.labels.size();
  table.degrees.assign(config.reps * block, 0);
  parallel_replicates(config.reps, config.threads, [&](std::uint64_t r) {
    TrajectoryTable run =
        grow(config.model, config.n, derive_stream_seed(config.seed, r),
             table.labels, table.checkpoints);
    std::copy(run.degrees.begin(), run.degrees.end(),
              table.degrees.begin() + r * block);
  });
  return table;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_first,
                                                 std::uint64_t n_last,
                                                 double ratio) {
  if (n_first < 1 || n_first > n_last || !(ratio > 1.0)) {
    throw std::invalid_argument("need 1 <= n_first <= n_last and ratio > 1");
  }
  std::vector<std::uint64_t> points;
  double x = static_cast<double>(n_first);
  while (x < static_cast<double>(n_last)) {
    std::uint64_t p = static_cast<std::uint64_t>(std::llround(x));
    if (points.empty() || p > points.back()) points.push_back(p);
    x *= ratio;
  }
  if (points.empty() || points.back() < n_last) points.push_back(n_last);
  return points;
}

void write_grow_csv(std::ostream& out, const GrowTable& table) {
  out << "# famtree-grow-csv v1\n";
  out << "replicate,n,label,degree,normalized\n";
  for (std::uint64_t r = 0; r < table.reps; ++r) {
    for (std::size_t c = 0; c < table.checkpoints.size(); ++c) {
      for (std::size_t l = 0; l < table.labels.size(); ++l) {
        out << r << ',' << table.checkpoints[c] << ','
            << format_label(table.labels[l]) << ',' << table.at(r, c, l) << ','
            << fmt17(table.normalized(r, c, l)) << '\n';
      }
    }
  }
}

std::string grow_summary_json(const GrowTable& table, unsigned max_moment,
                              std::uint64_t ks_reference_reps) {
  nlohmann::json labels = nlohmann::json::array();
  std::size_t last = table.checkpoints.size() - 1;
  for (std::size_t l = 0; l < table.labels.size(); ++l) {
    const Label& label = table.labels[l];
    std::vector<double> sample = table.normalized_column(last, l);
    nlohmann::json moments = nlohmann::json::array();
    for (unsigned k = 1; k <= max_moment; ++k) {
      MomentEstimate est = empirical_moment(sample, k);
      double theoretical = limit_moment(label, k, table.model);
      moments.push_back({{"k", k},
                         {"empirical", est.value},
                         {"se", est.std_error},
                         {"theoretical", theoretical},
                         {"ratio", est.value / theoretical}});
    }
    nlohmann::json ks;
    if (has_closed_form_root(table.model)) {
      if (label.is_root()) {
        KsResult r = ks_one_sample(sample, [&](double t) {
          return root_limit_cdf(table.model, t);
        });
        ks = {{"distance", r.distance}, {"reference", "root_limit_cdf"}};
      } else {
        RandomStream rng(derive_stream_seed(table.seed, 0x6b73 + l));
        std::vector<double> draws(ks_reference_reps);
        for (double& d : draws) {
          d = sample_limit_special(label, table.model, rng);
        }
        KsResult r = ks_two_sample(sample, draws);
        ks = {{"distance", r.distance}, {"reference", "product_law_draws"}};
      }
    }
    labels.push_back({{"model", std::string(to_string(table.model.variant))},
                      {"beta", table.model.beta},
                      {"label", format_label(label)},
                      {"n", table.checkpoints[last]},
                      {"reps", table.reps},
                      {"moments", moments},
                      {"ks", ks}});
  }
  nlohmann::json result =
      table.labels.size() == 1 ? labels[0] : labels;
  return result.dump(2);
}

void run_urn_csv(std::ostream& out, const UrnConfig& config) {
  if (config.reps == 0) throw std::invalid_argument("reps must be >= 1");
  out << "# famtree-urn-csv v1\n";
  out << "replicate,draws,white,black,white_fraction\n";
  for (std::uint64_t r = 0; r < config.reps; ++r) {
    std::uint64_t seed = derive_stream_seed(config.seed, r);
    UrnTrajectory traj =
        config.diagonal
            ? polya_run(config.initial, config.s, config.draws, seed,
                        config.checkpoints)
            : generalized_run(config.initial, config.matrix, config.draws,
                              seed, config.checkpoints);
    for (std::size_t c = 0; c < traj.checkpoints.size(); ++c) {
      double white = traj.white[c];
      double black = traj.black[c];
      out << r << ',' << traj.checkpoints[c] << ',' << fmt17(white) << ','
          << fmt17(black) << ',' << fmt17(white / (white + black)) << '\n';
    }
  }
}

void write_moments_csv(std::ostream& out, const ModelKind& model,
                       const std::vector<Label>& labels, unsigned max_k) {
  out << "# famtree-moments-csv v1 model=" << to_string(model.variant)
      << " beta=" << fmt17(model.beta) << '\n';
  out << "label,k,moment\n";
  for (const Label& label : labels) {
    for (unsigned k = 1; k <= max_k; ++k) {
      out << format_label(label) << ',' << k << ','
          << fmt17(limit_moment(label, k, model)) << '\n';
    }
  }
}

std::string moments_json(const ModelKind& model,
                         const std::vector<Label>& labels, unsigned max_k) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Label& label : labels) {
    for (unsigned k = 1; k <= max_k; ++k) {
      rows.push_back({{"label", format_label(label)},
                      {"k", k},
                      {"moment", limit_moment(label, k, model)}});
    }
  }
  return rows.dump(2);
}

}  // namespace famtree
