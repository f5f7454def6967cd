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

#include "famtree/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace famtree {

std::string_view to_string(ModelVariant variant) noexcept {
  return variant == ModelVariant::kLinearDegree ? "linear" : "port";
}

ModelKind ModelKind::linear_degree(double beta) {
  if (!(beta > -1.0)) {
    throw std::invalid_argument("linear model requires beta > -1");
  }
  return ModelKind{ModelVariant::kLinearDegree, beta};
}

ModelKind ModelKind::gport(double beta) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("port model requires beta > 0");
  }
  return ModelKind{ModelVariant::kGPort, beta};
}

ModelKind ModelKind::from_name(std::string_view name, double beta) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "linear") return linear_degree(beta);
  if (lower == "port") return gport(beta);
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected 'linear' or 'port')");
}

double ModelKind::scaling_exponent() const noexcept {
  return is_linear() ? 1.0 / (2.0 + beta) : 1.0 / (1.0 + beta);
}

double vertex_weight(std::uint32_t degree, std::uint32_t out_degree,
                     const ModelKind& model) noexcept {
  return model.is_linear() ? degree + model.beta : out_degree + model.beta;
}

double total_weight_formula(std::uint64_t n, const ModelKind& model) noexcept {
  // Kept as integer arithmetic plus one multiply so it matches a fresh
  // integer degree-sum recomputation bit for bit.
  if (model.is_linear()) {
    return static_cast<double>(2 * n - 2) + static_cast<double>(n) * model.beta;
  }
  return static_cast<double>(n - 1) + static_cast<double>(n) * model.beta;
}

}  // namespace famtree
