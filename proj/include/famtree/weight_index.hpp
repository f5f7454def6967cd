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

#ifndef FAMTREE_WEIGHT_INDEX_HPP_
#define FAMTREE_WEIGHT_INDEX_HPP_

#include <cstddef>
#include <vector>

namespace famtree {

// Dynamic proportional sampler over an append-only array of nonnegative
// weights, backed by a Fenwick (binary indexed) tree. insert, add_weight and
// sample are all O(log n); nothing here is O(n) per step, which is what keeps
// million-vertex growth cheap.
//
// Sampling contract: the cumulative weights split [0, total) into half-open
// intervals [cum_i, cum_{i+1}); sample(u) returns the owner of u*total. A
// point exactly on a boundary belongs to the interval on its right, so
// zero-weight entries are never selected.
//
// Single-writer. Distinct replicates use distinct instances.
class WeightIndex {
 public:
  WeightIndex() = default;

  // Appends a weight, returning its dense 0-based index. w must be >= 0.
  std::size_t insert(double w);

  // weight(i) += delta; the resulting weight must stay >= 0.
  void add_weight(std::size_t i, double delta);

  // Proportional draw resolved from a uniform u in [0,1). Requires total > 0.
  std::size_t sample(double u) const;

  double weight(std::size_t i) const;
  double total() const noexcept { return total_; }
  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }

  // Relative drift between the running total and a freshly summed one.
  double audit() const noexcept;
  // Recomputes the prefix tree and total from the stored weights.
  void rebuild();

  void reserve(std::size_t n);
  std::size_t memory_footprint() const noexcept;

 private:
  std::vector<double> weights_;  // raw weights, 0-based
  std::vector<double> tree_;     // Fenwick tree, 1-based
  double total_ = 0.0;
};

}  // namespace famtree

#endif  // FAMTREE_WEIGHT_INDEX_HPP_
