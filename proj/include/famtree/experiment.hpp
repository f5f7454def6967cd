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

#ifndef FAMTREE_EXPERIMENT_HPP_
#define FAMTREE_EXPERIMENT_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "famtree/label.hpp"
#include "famtree/model.hpp"
#include "famtree/urn.hpp"

namespace famtree {

// Shared settings for replicated growth experiments. Replicate r always uses
// the stream seed derived from (seed, r), so results are identical for any
// thread count.
struct ExperimentConfig {
  ModelKind model = ModelKind::linear_degree(0.0);
  std::uint64_t n = 100000;
  std::uint64_t reps = 200;
  std::vector<Label> watched;                // defaults to {root}
  std::vector<std::uint64_t> checkpoints;    // defaults to {n}
  std::uint64_t seed = 1;
  unsigned threads = 1;
  unsigned max_moment = 4;
};

// Watched-label degrees for every replicate and checkpoint.
class GrowTable {
 public:
  ModelKind model = ModelKind::linear_degree(0.0);
  std::vector<Label> labels;
  std::vector<std::uint64_t> checkpoints;
  std::uint64_t reps = 0;
  std::uint64_t seed = 1;  // master seed the replicate streams derive from
  std::vector<std::uint32_t> degrees;  // [rep][checkpoint][label], row-major

  std::uint32_t at(std::uint64_t rep, std::size_t checkpoint,
                   std::size_t label) const {
    return degrees[(rep * checkpoints.size() + checkpoint) * labels.size() +
                   label];
  }
  double normalized(std::uint64_t rep, std::size_t checkpoint,
                    std::size_t label) const;
  // All replicates' normalized degrees for one label at one checkpoint.
  std::vector<double> normalized_column(std::size_t checkpoint,
                                        std::size_t label) const;
};

GrowTable run_grow(const ExperimentConfig& config);

// Geometric checkpoint grid n_0, ~n_0*ratio, ..., n (deduplicated).
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_first,
                                                 std::uint64_t n_last,
                                                 double ratio);

// CSV rows `replicate,n,label,degree,normalized` under a versioned header
// comment. Numbers carry 17 significant digits.
void write_grow_csv(std::ostream& out, const GrowTable& table);

// One summary object per watched label at the final checkpoint:
//   {model, beta, label, n, reps, moments:[{k, empirical, se, theoretical,
//    ratio}], ks:{distance, reference}|null}
// `ks` is present when the label's limit law has a closed form (linear model
// at beta 0, out-degree model at beta 1), comparing the sample against
// `ks_reference_reps` inversion draws from that law. A single watched label
// yields the bare object, several yield an array.
std::string grow_summary_json(const GrowTable& table, unsigned max_moment,
                              std::uint64_t ks_reference_reps = 200000);

struct UrnConfig {
  UrnState initial{1.0, 1.0};
  bool diagonal = true;
  double s = 1.0;             // diagonal step size
  ReplacementMatrix matrix;   // used when !diagonal
  std::uint64_t draws = 100000;
  std::uint64_t reps = 1;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> checkpoints;  // defaults to {draws}
};

// CSV rows `replicate,draws,white,black,white_fraction` under a versioned
// header comment.
void run_urn_csv(std::ostream& out, const UrnConfig& config);

// Theoretical moment table for a label: CSV rows `label,k,moment` (versioned
// header) or a JSON array of {label, k, moment}.
void write_moments_csv(std::ostream& out, const ModelKind& model,
                       const std::vector<Label>& labels, unsigned max_k);
std::string moments_json(const ModelKind& model,
                         const std::vector<Label>& labels, unsigned max_k);

// Runs body(r) for r in [0, reps) on `threads` workers, chunked statically.
void parallel_replicates(std::uint64_t reps, unsigned threads,
                         const std::function<void(std::uint64_t)>& body);

}  // namespace famtree

#endif  // FAMTREE_EXPERIMENT_HPP_
