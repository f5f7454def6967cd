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

#ifndef FAMTREE_MODEL_HPP_
#define FAMTREE_MODEL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace famtree {

// Attachment rule. LinearDegree weights a vertex by degree + beta (beta > -1);
// GPort weights by out-degree + beta (beta > 0, plane-oriented recursive tree
// generalization).
enum class ModelVariant { kLinearDegree, kGPort };

std::string_view to_string(ModelVariant variant) noexcept;

struct ModelKind {
  ModelVariant variant = ModelVariant::kLinearDegree;
  double beta = 0.0;

  static ModelKind linear_degree(double beta);  // requires beta > -1
  static ModelKind gport(double beta);          // requires beta > 0

  // Parses "linear" / "port" (case-insensitive) together with beta.
  static ModelKind from_name(std::string_view name, double beta);

  bool is_linear() const noexcept {
    return variant == ModelVariant::kLinearDegree;
  }

  // Exponent delta such that deg(x, G_n) / n^delta converges: 1/(2+beta) for
  // the linear-degree model, 1/(1+beta) for GPort.
  double scaling_exponent() const noexcept;

  bool operator==(const ModelKind&) const = default;
};

// Attachment weight of a single vertex: degree + beta (LinearDegree) or
// out_degree + beta (GPort).
double vertex_weight(std::uint32_t degree, std::uint32_t out_degree,
                     const ModelKind& model) noexcept;

// Total weight S_n of any n-vertex tree: 2n-2+n*beta for LinearDegree and
// (n-1)+n*beta for GPort. Equals the sum of vertex_weight over all vertices
// of every reachable tree of size n.
double total_weight_formula(std::uint64_t n, const ModelKind& model) noexcept;

}  // namespace famtree

#endif  // FAMTREE_MODEL_HPP_
