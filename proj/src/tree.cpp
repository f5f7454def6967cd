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

#include "famtree/tree.hpp"

#include <algorithm>

namespace famtree {

double vertex_weight(const VertexRecord& vertex, const ModelKind& model) noexcept {
  return vertex_weight(vertex.degree, vertex.out_degree, model);
}

TreeState::TreeState(ModelKind model) : model_(model) {
  parent_.push_back(0);
  coord_.push_back(0);
  degree_.push_back(0);
}

Label TreeState::label_of(std::uint32_t v) const {
  Label label;
  while (v != 0) {
    label.path.push_back(coord_[v]);
    v = parent_[v];
  }
  std::reverse(label.path.begin(), label.path.end());
  return label;
}

VertexRecord TreeState::record(std::uint32_t v) const {
  VertexRecord rec;
  rec.label = label_of(v);
  rec.degree = degree_[v];
  rec.out_degree = out_degree(v);
  return rec;
}

std::uint32_t TreeState::append_child(std::uint32_t parent) {
  std::uint32_t child = static_cast<std::uint32_t>(degree_.size());
  // The parent's next free child coordinate: the root has out-degree ==
  // degree, everyone else out-degree == degree - 1.
  std::uint32_t coordinate = out_degree(parent) + 1;
  parent_.push_back(parent);
  coord_.push_back(coordinate);
  degree_.push_back(1);
  degree_[parent] += 1;
  return child;
}

double TreeState::recomputed_weight_sum() const noexcept {
  // Sum of (degree_i or out_degree_i) + n * beta, keeping the integer part
  // exact and adding the beta part with the same expression as the closed
  // formula.
  std::uint64_t base = model_.is_linear() ? degree_sum() : out_degree_sum();
  return static_cast<double>(base) + static_cast<double>(n()) * model_.beta;
}

std::uint64_t TreeState::degree_sum() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint32_t d : degree_) sum += d;
  return sum;
}

std::uint64_t TreeState::out_degree_sum() const noexcept {
  // degree - 1 everywhere except the root.
  return degree_sum() - (n() - 1);
}

void TreeState::reserve(std::uint64_t n) {
  parent_.reserve(n);
  coord_.reserve(n);
  degree_.reserve(n);
}

std::size_t TreeState::memory_footprint() const noexcept {
  return sizeof(*this) +
         (parent_.capacity() + coord_.capacity() + degree_.capacity()) *
             sizeof(std::uint32_t);
}

}  // namespace famtree
