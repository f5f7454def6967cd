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

#include "famtree/weight_index.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace famtree {

namespace {

inline std::size_t lowbit(std::size_t p) noexcept { return p & (~p + 1); }

}  // namespace

std::size_t WeightIndex::insert(double w) {
  if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  if (tree_.empty()) tree_.push_back(0.0);  // 1-based, slot 0 unused
  weights_.push_back(w);
  std::size_t p = weights_.size();
  // tree_[p] covers the range (p - lowbit(p), p]; assemble it from the
  // already-built subranges plus the new weight.
  double node = w;
  for (std::size_t q = p - 1; q > p - lowbit(p); q -= lowbit(q)) {
    node += tree_[q];
  }
  tree_.push_back(node);
  total_ += w;
  return p - 1;
}

void WeightIndex::add_weight(std::size_t i, double delta) {
  assert(i < weights_.size());
  weights_[i] += delta;
  assert(weights_[i] >= 0.0);
  total_ += delta;
  for (std::size_t p = i + 1; p < tree_.size(); p += lowbit(p)) {
    tree_[p] += delta;
  }
}

std::size_t WeightIndex::sample(double u) const {
  assert(!weights_.empty() && total_ > 0.0);
  double rem = u * total_;
  std::size_t n = weights_.size();
  std::size_t pos = 0;
  for (std::size_t k = std::bit_floor(n); k > 0; k >>= 1) {
    std::size_t next = pos + k;
    if (next <= n && rem >= tree_[next]) {
      pos = next;
      rem -= tree_[next];
    }
  }
  // pos = largest index with cumulative weight <= u*total, so the owner of
  // the half-open interval containing u*total. Rounding can push the target
  // to or past the final boundary; fall back to the last positive weight.
  if (pos >= n) pos = n - 1;
  while (pos > 0 && weights_[pos] == 0.0) --pos;
  return pos;
}

double WeightIndex::weight(std::size_t i) const {
  assert(i < weights_.size());
  return weights_[i];
}

double WeightIndex::audit() const noexcept {
  long double fresh = 0.0L;
  for (double w : weights_) fresh += w;
  long double reference = fresh < 0.0L ? -fresh : fresh;
  if (reference < 1.0L) reference = 1.0L;
  long double drift = total_ - fresh;
  if (drift < 0.0L) drift = -drift;
  return static_cast<double>(drift / reference);
}

void WeightIndex::rebuild() {
  std::size_t n = weights_.size();
  tree_.assign(n + 1, 0.0);
  long double fresh = 0.0L;
  for (std::size_t p = 1; p <= n; ++p) {
    tree_[p] += weights_[p - 1];
    std::size_t parent = p + lowbit(p);
    if (parent <= n) tree_[parent] += tree_[p];
    fresh += weights_[p - 1];
  }
  total_ = static_cast<double>(fresh);
}

void WeightIndex::reserve(std::size_t n) {
  weights_.reserve(n);
  tree_.reserve(n + 1);
}

std::size_t WeightIndex::memory_footprint() const noexcept {
  return sizeof(*this) +
         (weights_.capacity() + tree_.capacity()) * sizeof(double);
}

}  // namespace famtree
