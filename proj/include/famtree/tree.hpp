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

#ifndef FAMTREE_TREE_HPP_
#define FAMTREE_TREE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "famtree/label.hpp"
#include "famtree/model.hpp"

namespace famtree {

// Snapshot view of one vertex. White/black weights are populated only while
// the coloring instrumentation tracks that vertex.
struct VertexRecord {
  Label label;
  std::uint32_t degree = 0;
  std::uint32_t out_degree = 0;
  std::optional<double> white_weight;
  std::optional<double> black_weight;
};

double vertex_weight(const VertexRecord& vertex, const ModelKind& model) noexcept;

// Growing rooted ordered tree in columnar form: parent index, child
// coordinate and degree per vertex. Out-degree is derived (degree minus one
// except at the root), so no floating point state accumulates; S_n is always
// recomputed from integer degree sums plus n*beta.
class TreeState {
 public:
  explicit TreeState(ModelKind model);

  const ModelKind& model() const noexcept { return model_; }
  std::uint64_t n() const noexcept { return degree_.size(); }

  std::uint32_t degree(std::uint32_t v) const { return degree_[v]; }
  std::uint32_t out_degree(std::uint32_t v) const {
    return v == 0 ? degree_[v] : degree_[v] - 1;
  }
  std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
  // Child coordinate under the parent (1-based); 0 for the root.
  std::uint32_t coord(std::uint32_t v) const { return coord_[v]; }

  Label label_of(std::uint32_t v) const;
  VertexRecord record(std::uint32_t v) const;

  // Appends a new leaf under `parent`, as its next child (coordinate =
  // previous child count + 1). Returns the new vertex index.
  std::uint32_t append_child(std::uint32_t parent);

  double total_weight() const noexcept {
    return total_weight_formula(n(), model_);
  }
  // Fresh weight sum: integer degree sums plus n*beta, matching
  // total_weight_formula bit-for-bit on every reachable state.
  double recomputed_weight_sum() const noexcept;

  std::uint64_t degree_sum() const noexcept;
  std::uint64_t out_degree_sum() const noexcept;

  void reserve(std::uint64_t n);
  std::size_t memory_footprint() const noexcept;

 private:
  ModelKind model_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> coord_;
  std::vector<std::uint32_t> degree_;
};

}  // namespace famtree

#endif  // FAMTREE_TREE_HPP_
