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

#include <cmath>
#include <initializer_list>

#include "famtree/special.hpp"

using famtree::beta_cdf;
using famtree::KahanSum;
using famtree::log_beta;
using famtree::log_gamma;
using famtree::regularized_incomplete_beta;
using famtree::scaled_half_normal_cdf;
using famtree::scaled_sqrt_exponential_cdf;

TEST_CASE("log_gamma matches known values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::exp(log_gamma(0.5)) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(std::exp(log_gamma(5.0)) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(log_gamma(10.0) ==
        doctest::Approx(std::log(362880.0)).epsilon(1e-14));
}

TEST_CASE("log_beta matches factorial identities") {
  // B(2, 3) = 1!2!/4! = 1/12.
  CHECK(log_beta(2.0, 3.0) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-13));
  // B(0.5, 0.5) = pi.
  CHECK(log_beta(0.5, 0.5) == doctest::Approx(std::log(M_PI)).epsilon(1e-13));
  CHECK(log_beta(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("regularized incomplete beta at frozen rational points") {
  // Values with exact closed forms, worked out from the polynomial CDFs.
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.5) ==
        doctest::Approx(0.6875).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(2.0, 2.0, 0.25) ==
        doctest::Approx(0.15625).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(1.0, 1.0, 0.3) ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(3.0, 1.0, 0.9) ==
        doctest::Approx(0.729).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(5.0, 7.0, 0.35) ==
        doctest::Approx(0.33168846334838858).epsilon(1e-12));
}

TEST_CASE("incomplete beta endpoints and symmetry") {
  CHECK(regularized_incomplete_beta(2.5, 1.5, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.5, 1.5, 1.0) == 1.0);
  for (double x : {0.1, 0.3, 0.5, 0.8}) {
    for (double a : {0.5, 1.0, 2.5}) {
      for (double b : {0.7, 1.0, 4.0}) {
        const double direct = regularized_incomplete_beta(a, b, x);
        const double mirrored = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
        CHECK(direct == doctest::Approx(mirrored).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("beta_cdf is monotone and normalized") {
  double prev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    const double value = beta_cdf(1.5, 2.5, x);
    CHECK(value >= prev);
    prev = value;
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-12));
  // Beta(1, b) has CDF 1 - (1-x)^b.
  CHECK(beta_cdf(1.0, 3.0, 0.4) ==
        doctest::Approx(1.0 - std::pow(0.6, 3)).epsilon(1e-12));
}

TEST_CASE("scaled half-normal CDF equals erf(t/2)") {
  CHECK(scaled_half_normal_cdf(0.0) == 0.0);
  CHECK(scaled_half_normal_cdf(0.5) ==
        doctest::Approx(0.2763263901682369).epsilon(1e-14));
  CHECK(scaled_half_normal_cdf(1.0) ==
        doctest::Approx(0.52049987781304652).epsilon(1e-14));
  CHECK(scaled_half_normal_cdf(2.0) ==
        doctest::Approx(0.84270079294971489).epsilon(1e-14));
}

TEST_CASE("scaled sqrt-exponential CDF equals 1 - exp(-t^2/4)") {
  CHECK(scaled_sqrt_exponential_cdf(0.0) == 0.0);
  CHECK(scaled_sqrt_exponential_cdf(0.5) ==
        doctest::Approx(0.060586937186524213).epsilon(1e-14));
  CHECK(scaled_sqrt_exponential_cdf(1.0) ==
        doctest::Approx(0.22119921692859512).epsilon(1e-14));
  CHECK(scaled_sqrt_exponential_cdf(2.0) ==
        doctest::Approx(0.63212055882855767).epsilon(1e-14));
}

TEST_CASE("kahan summation keeps precision on adversarial sums") {
  KahanSum sum;
  sum.add(1.0);
  for (int i = 0; i < 10000000; ++i) sum.add(1e-16);
  // Naive summation would lose every small term (1.0 + 1e-16 == 1.0).
  CHECK(sum.value() == doctest::Approx(1.0 + 1e-9).epsilon(1e-12));
  KahanSum zero;
  CHECK(zero.value() == 0.0);
}
