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
//
// Command line driver: grow preferential-attachment family trees, run urn
// simulations, print limit-law moment tables and run the validation battery.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "famtree/experiment.hpp"
#include "famtree/label.hpp"
#include "famtree/model.hpp"
#include "famtree/validate.hpp"

namespace {

// Counts are read as doubles so that forms like 1e5 parse; exact integers up
// to 2^53 survive the round trip.
std::uint64_t as_count(double x, const char* what) {
  if (!(x >= 0.0) || x != std::floor(x) || x > 9e15) {
    throw std::invalid_argument(std::string(what) + " must be a whole number");
  }
  return static_cast<std::uint64_t>(x);
}

std::vector<std::uint64_t> as_counts(const std::vector<double>& xs,
                                     const char* what) {
  std::vector<std::uint64_t> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(as_count(x, what));
  return out;
}

std::vector<famtree::Label> parse_labels(const std::vector<std::string>& texts) {
  std::vector<famtree::Label> labels;
  labels.reserve(texts.size());
  for (const std::string& t : texts) labels.push_back(famtree::parse_label(t));
  return labels;
}

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  body(out);
}

unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random family trees with preferential attachment"};
  app.require_subcommand(1);
  int exit_code = 0;

  // Options shared by the tree-growing subcommands.
  std::string model_name = "linear";
  double beta = 0.0;
  double n = 1e5;
  double reps = 1;
  std::vector<std::string> watch_texts;
  std::vector<double> checkpoint_values;
  double seed = 1;
  unsigned threads = default_threads();
  std::string out_path = "-";
  std::string format = "csv";
  unsigned max_moment = 4;

  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--model", model_name, "attachment rule: linear or port")
        ->check(CLI::IsMember({"linear", "port"}));
    sub->add_option("--beta", beta,
                    "weight offset (beta > -1 for linear, beta > 0 for port)");
  };
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--n", n, "final tree size (counts accept forms like 1e5)");
    sub->add_option("--reps", reps, "independent replicates");
    sub->add_option("--seed", seed, "master seed; replicate r uses a derived stream");
    sub->add_option("--threads", threads, "worker threads (results do not depend on this)");
    sub->add_option("--out", out_path, "output file, - for stdout");
  };

  CLI::App* grow = app.add_subcommand(
      "grow", "grow trees and report watched-label degrees");
  add_model_options(grow);
  add_run_options(grow);
  grow->add_option("--watch", watch_texts,
                   "labels to track, e.g. root or 2.1.3 (repeatable)")
      ->delimiter(',');
  grow->add_option("--checkpoints", checkpoint_values,
                   "tree sizes to record at (default: final size only)")
      ->delimiter(',');
  grow->add_option("--format", format, "csv or json summary")
      ->check(CLI::IsMember({"csv", "json"}));
  grow->add_option("--max-moment", max_moment, "moments in the json summary");
  grow->callback([&] {
    famtree::ExperimentConfig config;
    config.model = famtree::ModelKind::from_name(model_name, beta);
    config.n = as_count(n, "--n");
    config.reps = as_count(reps, "--reps");
    config.watched = parse_labels(watch_texts);
    config.checkpoints = as_counts(checkpoint_values, "--checkpoints");
    config.seed = as_count(seed, "--seed");
    config.threads = threads;
    famtree::GrowTable table = famtree::run_grow(config);
    with_output(out_path, [&](std::ostream& os) {
      if (format == "csv") {
        famtree::write_grow_csv(os, table);
      } else {
        os << famtree::grow_summary_json(table, max_moment) << '\n';
      }
    });
  });

  double first = 1000;
  double ratio = 2.0;
  CLI::App* converge = app.add_subcommand(
      "converge",
      "grow trees recording degrees on a geometric checkpoint grid");
  add_model_options(converge);
  add_run_options(converge);
  converge->add_option("--watch", watch_texts, "labels to track (repeatable)")
      ->delimiter(',');
  converge->add_option("--first", first, "first checkpoint size");
  converge->add_option("--ratio", ratio, "checkpoint growth ratio (> 1)");
  converge->callback([&] {
    famtree::ExperimentConfig config;
    config.model = famtree::ModelKind::from_name(model_name, beta);
    config.n = as_count(n, "--n");
    config.reps = as_count(reps, "--reps");
    config.watched = parse_labels(watch_texts);
    config.checkpoints = famtree::geometric_checkpoints(
        as_count(first, "--first"), config.n, ratio);
    config.seed = as_count(seed, "--seed");
    config.threads = threads;
    famtree::GrowTable table = famtree::run_grow(config);
    with_output(out_path, [&](std::ostream& os) {
      famtree::write_grow_csv(os, table);
    });
  });

  double white = 1.0;
  double black = 1.0;
  double step_size = 1.0;
  std::vector<double> matrix_values;
  double draws = 1e5;
  CLI::App* urn = app.add_subcommand(
      "urn", "two-color urn runs (diagonal or general replacement)");
  urn->add_option("--white", white, "initial white weight (> 0)");
  urn->add_option("--black", black, "initial black weight (>= 0)");
  urn->add_option("--s", step_size, "diagonal replacement: add s to the drawn color");
  urn->add_option("--matrix", matrix_values,
                  "general replacement a b c d: drawing white adds (a white, "
                  "b black), black adds (c white, d black)")
      ->expected(4)
      ->delimiter(',');
  urn->add_option("--draws", draws, "draws per replicate");
  urn->add_option("--reps", reps, "independent replicates");
  urn->add_option("--seed", seed, "master seed");
  urn->add_option("--checkpoints", checkpoint_values,
                  "draw counts to record at (default: final only)")
      ->delimiter(',');
  urn->add_option("--out", out_path, "output file, - for stdout");
  urn->callback([&] {
    famtree::UrnConfig config;
    config.initial = famtree::UrnState{white, black};
    config.draws = as_count(draws, "--draws");
    config.reps = as_count(reps, "--reps");
    config.seed = as_count(seed, "--seed");
    config.checkpoints = as_counts(checkpoint_values, "--checkpoints");
    if (matrix_values.empty()) {
      config.diagonal = true;
      config.s = step_size;
    } else {
      config.diagonal = false;
      config.matrix = famtree::ReplacementMatrix{
          matrix_values[0], matrix_values[1], matrix_values[2],
          matrix_values[3]};
    }
    with_output(out_path, [&](std::ostream& os) {
      famtree::run_urn_csv(os, config);
    });
  });

  std::vector<std::string> label_texts;
  unsigned max_k = 4;
  CLI::App* moments = app.add_subcommand(
      "moments", "theoretical limit-law moments for labels");
  add_model_options(moments);
  moments->add_option("--label", label_texts, "labels (repeatable, default root)")
      ->delimiter(',');
  moments->add_option("--max-k", max_k, "highest moment order");
  moments->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  moments->add_option("--out", out_path, "output file, - for stdout");
  moments->callback([&] {
    famtree::ModelKind model = famtree::ModelKind::from_name(model_name, beta);
    std::vector<famtree::Label> labels = label_texts.empty()
                                             ? std::vector<famtree::Label>{{}}
                                             : parse_labels(label_texts);
    with_output(out_path, [&](std::ostream& os) {
      if (format == "csv") {
        famtree::write_moments_csv(os, model, labels, max_k);
      } else {
        os << famtree::moments_json(model, labels, max_k) << '\n';
      }
    });
  });

  famtree::ValidateOptions validate_options;
  validate_options.threads = default_threads();
  double validate_seed = 42;
  CLI::App* validate = app.add_subcommand(
      "validate", "run the full statistical validation battery");
  validate->add_option("--seed", validate_seed, "battery master seed");
  validate->add_flag("--quick", validate_options.quick,
                     "smaller runs with widened statistical tolerances");
  validate->add_option("--threads", validate_options.threads, "worker threads");
  validate->add_option("--inject-failure", validate_options.inject_failure)
      ->group("");  // harness testing hooks, hidden from --help
  validate->add_option("--scale-n", validate_options.scale_n)->group("");
  validate->add_option("--scale-reps", validate_options.scale_reps)->group("");
  validate->callback([&] {
    validate_options.seed = as_count(validate_seed, "--seed");
    famtree::ValidateReport report = famtree::run_validate(validate_options);
    exit_code = famtree::print_report(std::cout, report) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
