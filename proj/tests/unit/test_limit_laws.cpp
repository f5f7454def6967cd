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
#include <stdexcept>

#include "famtree/label.hpp"
#include "famtree/limit_laws.hpp"
#include "famtree/model.hpp"
#include "famtree/rng.hpp"

using famtree::BetaFactor;
using famtree::has_closed_form_root;
using famtree::Label;
using famtree::limit_moment;
using famtree::LimitLaw;
using famtree::log_port_normalizer;
using famtree::ModelKind;
using famtree::port_martingale_value;
using famtree::port_normalizer;
using famtree::RandomStream;
using famtree::root_limit_cdf;
using famtree::sample_limit_special;
using famtree::zeta0_moment;
using famtree::zeta0_moment_linear;
using famtree::zeta0_moment_linear_binomial_form;
using famtree::zeta0_moment_port;

TEST_CASE("beta factor moments follow the product formula") {
  CHECK(BetaFactor{1.0, 1.0}.moment(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(BetaFactor{1.0, 1.0}.moment(2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(BetaFactor{2.0, 1.0}.moment(1) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(BetaFactor{2.0, 1.0}.moment(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(BetaFactor{2.0, 2.0}.moment(2) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(BetaFactor{1.5, 2.5}.moment(3) ==
        doctest::Approx(0.109375).epsilon(1e-15));
  // Degenerate factor is identically one.
  CHECK(BetaFactor{1.0, 0.0}.moment(5) == 1.0);
  CHECK(BetaFactor{1.0, 0.0}.degenerate());
  // Zeroth moment is one by convention.
  CHECK(BetaFactor{3.0, 4.0}.moment(0) == 1.0);
}

TEST_CASE("root moments in the linear model match frozen values") {
  // beta = 0: E zeta_0 = 2/sqrt(pi), E zeta_0^2 = 2, E zeta_0^3 = 8/sqrt(pi),
  // E zeta_0^4 = 12 (moments of sqrt(2)|N(0,1)|).
  CHECK(zeta0_moment_linear(1, 0.0) ==
        doctest::Approx(1.1283791670955126).epsilon(1e-13));
  CHECK(zeta0_moment_linear(2, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(zeta0_moment_linear(3, 0.0) ==
        doctest::Approx(4.5135166683820493).epsilon(1e-13));
  CHECK(zeta0_moment_linear(4, 0.0) == doctest::Approx(12.0).epsilon(1e-13));
  // beta = 1.
  CHECK(zeta0_moment_linear(1, 1.0) ==
        doctest::Approx(1.9783642596467907).epsilon(1e-13));
  CHECK(zeta0_moment_linear(2, 1.0) ==
        doctest::Approx(5.3578770694154967).epsilon(1e-13));
  CHECK(zeta0_moment_linear(3, 1.0) == doctest::Approx(18.0).epsilon(1e-13));
  CHECK(zeta0_moment_linear(4, 1.0) ==
        doctest::Approx(71.221113347284458).epsilon(1e-13));
  // Fractional beta spot checks.
  CHECK(zeta0_moment_linear(1, -0.5) ==
        doctest::Approx(0.75820213223413369).epsilon(1e-13));
  CHECK(zeta0_moment_linear(2, -0.5) ==
        doctest::Approx(1.0155884545698004).epsilon(1e-13));
  CHECK(zeta0_moment_linear(3, 2.5) ==
        doctest::Approx(69.066453632186082).epsilon(1e-13));
}

TEST_CASE("the two linear root-moment forms agree") {
  for (double beta : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (unsigned k = 0; k <= 8; ++k) {
      const double gamma_form = zeta0_moment_linear(k, beta);
      const double binom_form = zeta0_moment_linear_binomial_form(k, beta);
      CHECK(std::abs(gamma_form - binom_form) <=
            1e-12 * std::max(1.0, std::abs(gamma_form)));
    }
  }
}

TEST_CASE("linear beta=0 even root moments are double factorials of 2") {
  // sqrt(2)|N(0,1)| has E X^(2m) = 2^m (2m-1)!!.
  double expected = 1.0;
  for (unsigned m = 1; m <= 4; ++m) {
    expected *= 2.0 * (2.0 * m - 1.0);
    CHECK(zeta0_moment_linear(2 * m, 0.0) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("root moments in the out-degree model match frozen values") {
  // beta = 1: moments of 2 sqrt(Exp(1)): E X^k = 2^k Gamma(k/2 + 1).
  CHECK(zeta0_moment_port(1, 1.0) ==
        doctest::Approx(1.7724538509055159).epsilon(1e-13));
  CHECK(zeta0_moment_port(2, 1.0) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(zeta0_moment_port(3, 1.0) ==
        doctest::Approx(10.634723105433096).epsilon(1e-13));
  CHECK(zeta0_moment_port(4, 1.0) == doctest::Approx(32.0).epsilon(1e-13));
  CHECK(zeta0_moment_port(3, 0.5) == doctest::Approx(4.21875).epsilon(1e-13));
  CHECK(zeta0_moment_port(3, 2.0) == doctest::Approx(36.0).epsilon(1e-13));
}

TEST_CASE("zeta0_moment dispatches on the model") {
  CHECK(zeta0_moment(2, ModelKind::linear_degree(0.0)) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(zeta0_moment(2, ModelKind::gport(1.0)) ==
        doctest::Approx(4.0).epsilon(1e-13));
  CHECK(zeta0_moment(0, ModelKind::linear_degree(1.5)) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("for_label builds the factor list from the coordinates") {
  const ModelKind linear = ModelKind::linear_degree(0.5);
  // Root: no factors.
  const LimitLaw root = LimitLaw::for_label(Label(), linear);
  CHECK(root.factors.empty());
  CHECK(root.exponent == doctest::Approx(1.0 / 2.5));
  // Label (1): first coordinate 1 gives the degenerate factor.
  const LimitLaw one = LimitLaw::for_label(Label({1}), linear);
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0].degenerate());
  // Label (3.2): Beta(1 + beta, 3 - 1) then Beta(1 + beta, 2).
  const LimitLaw deep = LimitLaw::for_label(Label({3, 2}), linear);
  REQUIRE(deep.factors.size() == 2);
  CHECK(deep.factors[0].a == 1.5);
  CHECK(deep.factors[0].b == 2.0);
  CHECK(deep.factors[1].a == 1.5);
  CHECK(deep.factors[1].b == 2.0);
  // Out-degree model: every factor is Beta(beta, coordinate), including the
  // first one.
  const ModelKind port = ModelKind::gport(2.0);
  const LimitLaw port_one = LimitLaw::for_label(Label({1, 4}), port);
  REQUIRE(port_one.factors.size() == 2);
  CHECK(port_one.factors[0].a == 2.0);
  CHECK(port_one.factors[0].b == 1.0);
  CHECK(port_one.factors[1].a == 2.0);
  CHECK(port_one.factors[1].b == 4.0);
  CHECK(port_one.exponent == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("limit moments multiply root moments by factor moments") {
  const ModelKind linear1 = ModelKind::linear_degree(1.0);
  CHECK(limit_moment(Label({1}), 1, linear1) ==
        doctest::Approx(1.9783642596467907).epsilon(1e-13));
  CHECK(limit_moment(Label({1}), 2, linear1) ==
        doctest::Approx(5.3578770694154967).epsilon(1e-13));
  CHECK(limit_moment(Label({2}), 1, linear1) ==
        doctest::Approx(1.3189095064311938).epsilon(1e-13));
  CHECK(limit_moment(Label({2}), 2, linear1) ==
        doctest::Approx(2.6789385347077483).epsilon(1e-13));
  CHECK(limit_moment(Label({3, 1}), 1, linear1) ==
        doctest::Approx(0.65945475321559688).epsilon(1e-13));
  CHECK(limit_moment(Label({3, 1}), 2, linear1) ==
        doctest::Approx(0.80368156041232452).epsilon(1e-13));
  // Label (2) at linear beta=0: factor Beta(1, 1), so E xi = (2/sqrt(pi))/2
  // and E xi^2 = 2 * (1/3) = 2/3.
  CHECK(limit_moment(Label({2}), 2, ModelKind::linear_degree(0.0)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(limit_moment(Label({2}), 1, ModelKind::linear_degree(0.0)) ==
        doctest::Approx(0.56418958354775628).epsilon(1e-13));
}

TEST_CASE("closed-form root detection") {
  CHECK(has_closed_form_root(ModelKind::linear_degree(0.0)));
  CHECK(has_closed_form_root(ModelKind::gport(1.0)));
  CHECK_FALSE(has_closed_form_root(ModelKind::linear_degree(1.0)));
  CHECK_FALSE(has_closed_form_root(ModelKind::gport(2.0)));
}

TEST_CASE("root limit CDFs in the closed-form cases") {
  const ModelKind linear0 = ModelKind::linear_degree(0.0);
  CHECK(root_limit_cdf(linear0, 1.0) ==
        doctest::Approx(0.52049987781304652).epsilon(1e-13));
  const ModelKind port1 = ModelKind::gport(1.0);
  CHECK(root_limit_cdf(port1, 1.0) ==
        doctest::Approx(0.22119921692859512).epsilon(1e-13));
  CHECK_THROWS_AS(root_limit_cdf(ModelKind::linear_degree(2.0), 1.0),
                  std::logic_error);
}

TEST_CASE("special-case sampler matches the analytic moments") {
  const ModelKind linear0 = ModelKind::linear_degree(0.0);
  RandomStream rng(123);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_limit_special(Label({2}), linear0, rng);
    sum += x;
    sum_sq += x * x;
  }
  CHECK(sum / n == doctest::Approx(0.56418958354775628).epsilon(0.03));
  CHECK(sum_sq / n == doctest::Approx(2.0 / 3.0).epsilon(0.03));

  const ModelKind port1 = ModelKind::gport(1.0);
  double root_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_limit_special(Label(), port1, rng);
    root_sq += x * x;
  }
  CHECK(root_sq / n == doctest::Approx(4.0).epsilon(0.03));
  CHECK_THROWS_AS(sample_limit_special(Label(), ModelKind::gport(2.0), rng),
                  std::logic_error);
}

TEST_CASE("martingale normalizer has frozen small values") {
  // c_n(k) = prod_{i=1}^{n-1} (1 + k / (i(1+beta) - 1)).
  CHECK(port_normalizer(1, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(port_normalizer(2, 1, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(port_normalizer(5, 2, 1.0) == doctest::Approx(9.0).epsilon(1e-13));
  CHECK(port_normalizer(10, 3, 0.5) == doctest::Approx(217.0).epsilon(1e-12));
  CHECK(port_normalizer(50, 4, 2.0) ==
        doctest::Approx(248.31837207877831).epsilon(1e-12));
  CHECK(std::exp(log_port_normalizer(50, 4, 2.0)) ==
        doctest::Approx(248.31837207877831).epsilon(1e-12));
}

TEST_CASE("martingale values at the start of the run") {
  // At n=1 the normalizer is 1, so Z_1 = binom(X + k + beta - 1, k).
  CHECK(port_martingale_value(0, 1, 2, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // X=1, k=1, beta=1: binom(2, 1) / c_1 = 2.
  CHECK(port_martingale_value(1, 1, 1, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("martingale one-step identity holds exactly") {
  // The root gains a child with probability (x + beta) / S_n in the
  // out-degree model (root out-degree equals its degree), and
  // E[Z_{n+1} | X_n = x] = Z_n must hold as an algebraic identity.
  for (double beta : {0.5, 1.0, 2.0}) {
    const ModelKind model = ModelKind::gport(beta);
    for (unsigned k = 1; k <= 4; ++k) {
      for (std::uint64_t n = 1; n <= 40; n += 3) {
        for (std::uint32_t x = 0; x <= 12; x += 3) {
          const double s_n = famtree::total_weight_formula(n, model);
          if (s_n <= 0.0) continue;
          const double p = (x + beta) / s_n;
          const double stay = port_martingale_value(x, n + 1, k, beta);
          const double move = port_martingale_value(x + 1, n + 1, k, beta);
          const double expected = p * move + (1.0 - p) * stay;
          const double z_n = port_martingale_value(x, n, k, beta);
          CHECK(std::abs(expected - z_n) <=
                1e-12 * std::max(1.0, std::abs(z_n)));
        }
      }
    }
  }
}
