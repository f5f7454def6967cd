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

#include "famtree/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace famtree {

GrowthRun::GrowthRun(ModelKind model, std::uint64_t seed)
    : state_(model), rng_(seed) {
  trie_.push_back(WatchNode{});
  trie_[0].vertex = 0;
  // The sampling index starts empty: with a lone root the next step is
  // forced, and S_1 = beta would be an invalid (possibly negative) weight
  // for the linear model.
}

double GrowthRun::weight_of_vertex(std::uint32_t v) const noexcept {
  return vertex_weight(state_.degree(v), state_.out_degree(v), state_.model());
}

std::uint32_t GrowthRun::step() {
  std::uint64_t n = state_.n();
  double u = rng_.uniform();
  std::uint32_t parent;
  if (n == 1) {
    parent = 0;  // forced; the uniform is still consumed to keep alignment
  } else {
    parent = static_cast<std::uint32_t>(index_.sample(u));
  }
  std::uint32_t child = state_.append_child(parent);
  std::uint32_t coordinate = state_.coord(child);

  if (n == 1) {
    index_.insert(weight_of_vertex(0));
    index_.insert(weight_of_vertex(child));
  } else {
    // Gaining an edge raises both degree and out-degree by one, so the
    // parent's weight grows by 1 under either model.
    index_.add_weight(parent, 1.0);
    index_.insert(vertex_weight(1, 0, state_.model()));
  }

  // An increment at the activation birth itself is part of the initial
  // split, so only steps that started with the coloring active color it.
  bool was_active = coloring_snapshot_.active;
  on_birth(parent, coordinate, child);
  if (was_active) {
    std::int64_t p = parent;
    if (p == coloring_plan_->parent_vertex ||
        p == coloring_plan_->child_vertex) {
      color_increment(parent);
    }
  }

  maybe_audit();
  return child;
}

void GrowthRun::grow_to(std::uint64_t n_target) {
  while (state_.n() < n_target) step();
}

std::uint32_t GrowthRun::trie_walk_or_grow(const Label& label) {
  std::uint32_t node = 0;
  for (std::uint32_t coordinate : label.path) {
    auto& children = trie_[node].children;
    auto it = std::find_if(children.begin(), children.end(),
                           [&](const auto& e) { return e.first == coordinate; });
    if (it != children.end()) {
      node = it->second;
      continue;
    }
    std::uint32_t fresh = static_cast<std::uint32_t>(trie_.size());
    trie_.push_back(WatchNode{});
    trie_[node].children.emplace_back(coordinate, fresh);
    std::int64_t parent_vertex = trie_[node].vertex;
    if (parent_vertex >= 0) {
      // The watched vertex may already exist; resolve it by a one-off scan.
      std::int64_t found = -1;
      for (std::uint32_t v = static_cast<std::uint32_t>(parent_vertex) + 1;
           v < state_.n(); ++v) {
        if (state_.parent(v) == parent_vertex && state_.coord(v) == coordinate) {
          found = v;
          break;
        }
      }
      if (found >= 0) {
        bind(fresh, static_cast<std::uint32_t>(found));
      } else {
        armed_.push_back(ArmedEdge{static_cast<std::uint32_t>(parent_vertex),
                                   coordinate, fresh});
      }
    }
    node = fresh;
  }
  return node;
}

void GrowthRun::watch(const Label& label) { trie_walk_or_grow(label); }

void GrowthRun::bind(std::uint32_t node, std::uint32_t vertex) {
  trie_[node].vertex = vertex;
  if (coloring_plan_ && coloring_plan_->parent_node == node) {
    coloring_plan_->parent_vertex = vertex;
  }
  // Pending trie children bind too if their vertex already exists (possible
  // when an old vertex is resolved by scan), otherwise they become armed
  // edges. For a newborn the scan range is empty.
  for (const auto& [coordinate, child_node] : trie_[node].children) {
    std::int64_t found = -1;
    for (std::uint32_t v = vertex + 1; v < state_.n(); ++v) {
      if (state_.parent(v) == vertex && state_.coord(v) == coordinate) {
        found = v;
        break;
      }
    }
    if (found >= 0) {
      bind(child_node, static_cast<std::uint32_t>(found));
    } else {
      armed_.push_back(ArmedEdge{vertex, coordinate, child_node});
    }
  }
}

void GrowthRun::on_birth(std::uint32_t parent, std::uint32_t coordinate,
                         std::uint32_t child) {
  for (std::size_t i = 0; i < armed_.size(); ++i) {
    if (armed_[i].parent_vertex == parent && armed_[i].coord == coordinate) {
      std::uint32_t node = armed_[i].node;
      armed_[i] = armed_.back();
      armed_.pop_back();
      bind(node, child);
      break;
    }
  }
  if (coloring_plan_ && !coloring_snapshot_.active &&
      coloring_plan_->parent_vertex == static_cast<std::int64_t>(parent) &&
      coloring_plan_->child_coord == coordinate) {
    coloring_plan_->child_vertex = child;
    double beta = state_.model().beta;
    coloring_snapshot_.active = true;
    coloring_snapshot_.activation_step = state_.n();
    coloring_snapshot_.parent_white = 1.0 + beta;
    // deg + beta - (1 + beta) with the birth edge already counted.
    coloring_snapshot_.parent_black = static_cast<double>(state_.degree(parent)) - 1.0;
    coloring_snapshot_.child_white = 1.0 + beta;
    coloring_snapshot_.child_black = 0.0;
  }
}

void GrowthRun::color_increment(std::uint32_t vertex) {
  bool is_parent =
      static_cast<std::int64_t>(vertex) == coloring_plan_->parent_vertex;
  double& white = is_parent ? coloring_snapshot_.parent_white
                            : coloring_snapshot_.child_white;
  double& black = is_parent ? coloring_snapshot_.parent_black
                            : coloring_snapshot_.child_black;
  double u = rng_.uniform();
  if (u * (white + black) < white) {
    white += 1.0;
  } else {
    black += 1.0;
  }
  if (is_parent) ++coloring_snapshot_.parent_increments;
}

void GrowthRun::enable_coloring(const Label& parent, std::uint32_t child_index) {
  if (!state_.model().is_linear()) {
    throw std::logic_error("coloring requires the linear-degree model");
  }
  if (child_index == 0) {
    throw std::invalid_argument("child index must be >= 1");
  }
  if (coloring_plan_) {
    throw std::logic_error("coloring already configured");
  }
  std::uint32_t node = trie_walk_or_grow(parent);
  std::int64_t parent_vertex = trie_[node].vertex;
  if (parent_vertex >= 0 &&
      state_.out_degree(static_cast<std::uint32_t>(parent_vertex)) >=
          child_index) {
    throw std::logic_error("tracked child is already born");
  }
  coloring_plan_ = ColoringPlan{node, child_index, parent_vertex, -1};
}

std::uint32_t GrowthRun::degree_of(const Label& label) const {
  std::uint32_t node = 0;
  for (std::uint32_t coordinate : label.path) {
    const auto& children = trie_[node].children;
    auto it = std::find_if(children.begin(), children.end(),
                           [&](const auto& e) { return e.first == coordinate; });
    if (it == children.end()) {
      auto v = vertex_of(label);  // not watched; slow path
      return v ? state_.degree(*v) : 0;
    }
    node = it->second;
  }
  std::int64_t vertex = trie_[node].vertex;
  return vertex >= 0 ? state_.degree(static_cast<std::uint32_t>(vertex)) : 0;
}

std::optional<std::uint32_t> GrowthRun::vertex_of(const Label& label) const {
  std::uint32_t v = 0;
  for (std::uint32_t coordinate : label.path) {
    bool found = false;
    for (std::uint32_t u = v + 1; u < state_.n(); ++u) {
      if (state_.parent(u) == v && state_.coord(u) == coordinate) {
        v = u;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return v;
}

void GrowthRun::maybe_audit() {
  if (++steps_since_audit_ < audit_interval_) return;
  steps_since_audit_ = 0;
  last_audit_error_ = index_.audit();
  if (last_audit_error_ > 1e-9) {
    index_.rebuild();
    ++rebuild_count_;
  }
}

void GrowthRun::reserve(std::uint64_t n) {
  state_.reserve(n);
  index_.reserve(n);
}

std::size_t GrowthRun::memory_footprint() const noexcept {
  std::size_t trie_bytes = trie_.capacity() * sizeof(WatchNode);
  for (const WatchNode& node : trie_) {
    trie_bytes += node.children.capacity() *
                  sizeof(std::pair<std::uint32_t, std::uint32_t>);
  }
  return sizeof(*this) + state_.memory_footprint() +
         index_.memory_footprint() + trie_bytes +
         armed_.capacity() * sizeof(ArmedEdge);
}

TrajectoryTable grow(const ModelKind& model, std::uint64_t n_target,
                     std::uint64_t seed, std::span<const Label> watched,
                     std::span<const std::uint64_t> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    bool increasing = i == 0 || checkpoints[i] > checkpoints[i - 1];
    if (!increasing || checkpoints[i] == 0 || checkpoints[i] > n_target) {
      throw std::invalid_argument(
          "checkpoints must be strictly increasing, >= 1 and <= n_target");
    }
  }
  GrowthRun run(model, seed);
  run.reserve(n_target);
  TrajectoryTable table;
  table.labels.assign(watched.begin(), watched.end());
  table.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  for (const Label& label : table.labels) run.watch(label);
  table.degrees.reserve(table.labels.size() * table.checkpoints.size());
  for (std::uint64_t checkpoint : table.checkpoints) {
    run.grow_to(checkpoint);
    for (const Label& label : table.labels) {
      table.degrees.push_back(run.degree_of(label));
    }
  }
  run.grow_to(n_target);
  return table;
}

}  // namespace famtree
