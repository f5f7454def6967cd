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

#ifndef FAMTREE_ENGINE_HPP_
#define FAMTREE_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "famtree/label.hpp"
#include "famtree/model.hpp"
#include "famtree/rng.hpp"
#include "famtree/tree.hpp"
#include "famtree/weight_index.hpp"

namespace famtree {

// White/black split of the attachment weight of two tracked vertices: a
// parent and its j-th child. From activation (the child's birth) onward,
// white + black equals degree + beta for both, the child's weight is all
// white, and each weight increment of a tracked vertex is colored white with
// probability white/(white+black).
struct ColoringSnapshot {
  bool active = false;
  std::uint64_t activation_step = 0;  // tree size right after the child's birth
  std::uint64_t parent_increments = 0;
  double parent_white = 0.0;
  double parent_black = 0.0;
  double child_white = 0.0;
  double child_black = 0.0;

  double parent_fraction() const noexcept {
    return parent_white / (parent_white + parent_black);
  }
};

// One random growth run. Each step consumes exactly one uniform for the
// parent choice, plus one uniform per tracked-vertex increment while the
// coloring instrumentation is active; stream positions therefore do not
// depend on which labels are watched.
class GrowthRun {
 public:
  GrowthRun(ModelKind model, std::uint64_t seed);

  // Grows the tree by one vertex and returns the newcomer's index. The step
  // from a single root always attaches to the root (S_1 = beta may be
  // nonpositive for the linear model; every later S_n is positive).
  std::uint32_t step();
  void grow_to(std::uint64_t n_target);

  std::uint64_t n() const noexcept { return state_.n(); }
  const TreeState& state() const noexcept { return state_; }

  // Registers a label so that its degree is tracked cheaply. May be called
  // whether or not the vertex exists yet.
  void watch(const Label& label);

  // Current degree of the vertex at `label`; 0 if it has not been born.
  std::uint32_t degree_of(const Label& label) const;

  // Index of the vertex carrying `label`, if born. Walks the tree, so this
  // is for tests and one-off queries; watched labels resolve in O(1).
  std::optional<std::uint32_t> vertex_of(const Label& label) const;

  // Starts the two-vertex coloring instrumentation for `parent`'s
  // child_index-th child (linear model only). Must be called before that
  // child exists; weights initialize at its birth with white = 1 + beta on
  // both vertices and black = deg(parent) + beta - (1 + beta) on the parent.
  void enable_coloring(const Label& parent, std::uint32_t child_index);
  const ColoringSnapshot& coloring() const noexcept { return coloring_snapshot_; }

  // Sampling-index drift bookkeeping. The index is audited every
  // `interval` steps and rebuilt when the relative drift exceeds 1e-9.
  void set_audit_interval(std::uint64_t interval) noexcept {
    audit_interval_ = interval;
  }
  double last_audit_error() const noexcept { return last_audit_error_; }
  std::uint64_t rebuild_count() const noexcept { return rebuild_count_; }
  double index_total() const noexcept { return index_.total(); }
  double audit_index() const noexcept { return index_.audit(); }

  void reserve(std::uint64_t n);
  std::size_t memory_footprint() const noexcept;

 private:
  struct WatchNode {
    std::int64_t vertex = -1;  // bound vertex index, -1 while unborn
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;  // coord -> node
  };
  // An edge of the watch trie waiting for a birth: when `parent_vertex`
  // gains its `coord`-th child, `node` binds to the newborn.
  struct ArmedEdge {
    std::uint32_t parent_vertex;
    std::uint32_t coord;
    std::uint32_t node;
  };
  struct ColoringPlan {
    std::uint32_t parent_node;  // watch-trie node of the parent label
    std::uint32_t child_coord;
    std::int64_t parent_vertex = -1;
    std::int64_t child_vertex = -1;
  };

  double weight_of_vertex(std::uint32_t v) const noexcept;
  std::uint32_t trie_walk_or_grow(const Label& label);
  void bind(std::uint32_t node, std::uint32_t vertex);
  void on_birth(std::uint32_t parent, std::uint32_t coord, std::uint32_t child);
  void color_increment(std::uint32_t parent);
  void maybe_audit();

  TreeState state_;
  WeightIndex index_;
  RandomStream rng_;

  std::vector<WatchNode> trie_;  // node 0 is the root label, bound to vertex 0
  std::vector<ArmedEdge> armed_;

  std::optional<ColoringPlan> coloring_plan_;
  ColoringSnapshot coloring_snapshot_;

  std::uint64_t audit_interval_ = std::uint64_t{1} << 20;
  std::uint64_t steps_since_audit_ = 0;
  std::uint64_t rebuild_count_ = 0;
  double last_audit_error_ = 0.0;
};

// Degrees of the watched labels at each checkpoint (degrees refer to the
// checkpoint-sized tree, before the next attachment). Row-major by
// checkpoint.
struct TrajectoryTable {
  std::vector<Label> labels;
  std::vector<std::uint64_t> checkpoints;
  std::vector<std::uint32_t> degrees;

  std::uint32_t at(std::size_t checkpoint, std::size_t label) const {
    return degrees[checkpoint * labels.size() + label];
  }
};

// Deterministic in (model, n_target, seed): grows one tree and records the
// degree of each watched label at each checkpoint (0 before birth).
// Checkpoints must be strictly increasing and <= n_target.
TrajectoryTable grow(const ModelKind& model, std::uint64_t n_target,
                     std::uint64_t seed, std::span<const Label> watched,
                     std::span<const std::uint64_t> checkpoints);

}  // namespace famtree

#endif  // FAMTREE_ENGINE_HPP_
