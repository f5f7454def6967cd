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

#include <doctest.h>

#include <stdexcept>

#include "famtree/label.hpp"
#include "famtree/model.hpp"
#include "famtree/tree.hpp"

using famtree::Label;
using famtree::ModelKind;
using famtree::ModelVariant;
using famtree::total_weight_formula;
using famtree::TreeState;
using famtree::vertex_weight;

TEST_CASE("model factories validate beta domains") {
  CHECK(ModelKind::linear_degree(0.0).beta == 0.0);
  CHECK(ModelKind::linear_degree(-0.9).is_linear());
  CHECK_THROWS_AS(ModelKind::linear_degree(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelKind::linear_degree(-2.0), std::invalid_argument);
  CHECK(ModelKind::gport(1.0).variant == ModelVariant::kGPort);
  CHECK_THROWS_AS(ModelKind::gport(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelKind::gport(-1.0), std::invalid_argument);
}

TEST_CASE("model names round trip through from_name") {
  CHECK(ModelKind::from_name("linear", 0.5) == ModelKind::linear_degree(0.5));
  CHECK(ModelKind::from_name("LINEAR", 0.5) == ModelKind::linear_degree(0.5));
  CHECK(ModelKind::from_name("port", 2.0) == ModelKind::gport(2.0));
  CHECK(ModelKind::from_name("Port", 2.0) == ModelKind::gport(2.0));
  CHECK_THROWS_AS(ModelKind::from_name("uniform", 1.0), std::invalid_argument);
  CHECK(famtree::to_string(ModelVariant::kLinearDegree) == "linear");
  CHECK(famtree::to_string(ModelVariant::kGPort) == "port");
}

TEST_CASE("vertex weights follow the attachment rule") {
  const ModelKind linear = ModelKind::linear_degree(0.5);
  const ModelKind port = ModelKind::gport(0.5);
  // Linear: degree + beta, regardless of out-degree.
  CHECK(vertex_weight(3u, 2u, linear) == 3.5);
  CHECK(vertex_weight(1u, 0u, linear) == 1.5);
  // Port: out_degree + beta, regardless of degree.
  CHECK(vertex_weight(3u, 2u, port) == 2.5);
  CHECK(vertex_weight(1u, 0u, port) == 0.5);
}

TEST_CASE("total weight formulas match known values") {
  // Linear: S_n = 2n - 2 + n*beta. At beta=0, n=5: 8.
  CHECK(total_weight_formula(5, ModelKind::linear_degree(0.0)) == 8.0);
  CHECK(total_weight_formula(1, ModelKind::linear_degree(1.0)) == 1.0);
  // Port: S_n = (n-1) + n*beta. At beta=1, n=5: 9.
  CHECK(total_weight_formula(5, ModelKind::gport(1.0)) == 9.0);
  CHECK(total_weight_formula(2, ModelKind::gport(2.0)) == 5.0);
}

TEST_CASE("scaling exponents") {
  CHECK(ModelKind::linear_degree(0.0).scaling_exponent() == 0.5);
  CHECK(ModelKind::gport(1.0).scaling_exponent() == 0.5);
  CHECK(ModelKind::gport(2.0).scaling_exponent() == doctest::Approx(1.0 / 3.0));
  CHECK(ModelKind::linear_degree(1.0).scaling_exponent() ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("tree state starts as a bare root") {
  TreeState tree(ModelKind::linear_degree(0.0));
  CHECK(tree.n() == 1);
  CHECK(tree.degree(0) == 0);
  CHECK(tree.out_degree(0) == 0);
  CHECK(tree.coord(0) == 0);
  CHECK(tree.label_of(0).is_root());
}

TEST_CASE("append_child assigns sibling coordinates in order") {
  TreeState tree(ModelKind::linear_degree(0.0));
  const std::uint32_t a = tree.append_child(0);  // label 1
  const std::uint32_t b = tree.append_child(0);  // label 2
  const std::uint32_t c = tree.append_child(a);  // label 1.1
  const std::uint32_t d = tree.append_child(a);  // label 1.2
  const std::uint32_t e = tree.append_child(d);  // label 1.2.1
  CHECK(tree.n() == 6);
  CHECK(tree.label_of(a) == Label({1}));
  CHECK(tree.label_of(b) == Label({2}));
  CHECK(tree.label_of(c) == Label({1, 1}));
  CHECK(tree.label_of(d) == Label({1, 2}));
  CHECK(tree.label_of(e) == Label({1, 2, 1}));
  CHECK(tree.coord(d) == 2);
  CHECK(tree.parent(e) == d);
  CHECK(tree.degree(0) == 2);
  CHECK(tree.degree(a) == 3);
  CHECK(tree.out_degree(a) == 2);
  CHECK(tree.degree(e) == 1);
  CHECK(tree.out_degree(e) == 0);
}

TEST_CASE("degree sums track edges") {
  TreeState tree(ModelKind::gport(1.0));
  tree.append_child(0);
  tree.append_child(0);
  tree.append_child(1);
  // 4 vertices, 3 edges: degree sum 6, out-degree sum 3.
  CHECK(tree.degree_sum() == 6);
  CHECK(tree.out_degree_sum() == 3);
}

TEST_CASE("recomputed weight sum matches the closed formula exactly") {
  for (const ModelKind model :
       {ModelKind::linear_degree(0.0), ModelKind::linear_degree(1.0),
        ModelKind::linear_degree(-0.5), ModelKind::linear_degree(0.3),
        ModelKind::gport(1.0), ModelKind::gport(0.7)}) {
    TreeState tree(model);
    tree.append_child(0);
    tree.append_child(0);
    tree.append_child(1);
    tree.append_child(1);
    tree.append_child(3);
    tree.append_child(0);
    // Bit-exact equality, not approximate: both sides are integer-plus-n*beta.
    CHECK(tree.recomputed_weight_sum() == tree.total_weight());
    CHECK(tree.total_weight() == total_weight_formula(tree.n(), model));
  }
}

TEST_CASE("vertex records expose label and degrees") {
  TreeState tree(ModelKind::linear_degree(0.0));
  tree.append_child(0);
  tree.append_child(1);
  const famtree::VertexRecord rec = tree.record(1);
  CHECK(rec.label == Label({1}));
  CHECK(rec.degree == 2);
  CHECK(rec.out_degree == 1);
  CHECK_FALSE(rec.white_weight.has_value());
  CHECK_FALSE(rec.black_weight.has_value());
}
