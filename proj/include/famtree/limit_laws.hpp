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

#ifndef FAMTREE_LIMIT_LAWS_HPP_
#define FAMTREE_LIMIT_LAWS_HPP_

#include <cstdint>
#include <vector>

#include "famtree/label.hpp"
#include "famtree/model.hpp"
#include "famtree/rng.hpp"

namespace famtree {

// One Beta(a, b) factor of a limit variable; b == 0 marks the degenerate
// factor that is identically 1.
struct BetaFactor {
  double a = 1.0;
  double b = 0.0;

  bool degenerate() const noexcept { return b == 0.0; }
  // E Beta(a, b)^k = prod_{j=0}^{k-1} (a + j) / (a + b + j); 1 if degenerate.
  double moment(unsigned k) const;
};

// The limit of deg(x, G_n) / n^exponent for a fixed label x: the root limit
// times one independent Beta factor per coordinate of x.
struct LimitLaw {
  ModelKind model;
  Label label;
  double exponent = 0.0;
  std::vector<BetaFactor> factors;

  static LimitLaw for_label(const Label& label, const ModelKind& model);
};

// k-th moment of the root limit. Linear model (weight degree + beta):
//   E zeta_0^k = Gamma(1 + beta / (2 + beta)) / Gamma(beta + 1)
//                * Gamma(k + beta + 1) / Gamma(1 + (k + beta) / (2 + beta)).
double zeta0_moment_linear(unsigned k, double beta);

// The equivalent product form k! * Gamma(1 + beta / (2 + beta))
// / Gamma(1 + (k + beta) / (2 + beta)) * binom(k + beta, k), evaluated
// independently as a cross-check of the expression above.
double zeta0_moment_linear_binomial_form(unsigned k, double beta);

// Same for the out-degree model (weight out-degree + beta, beta > 0):
//   E zeta_0^k = Gamma(beta / (1 + beta)) * Gamma(k + beta)
//                / (Gamma((k + beta) / (1 + beta)) * Gamma(beta)).
double zeta0_moment_port(unsigned k, double beta);

double zeta0_moment(unsigned k, const ModelKind& model);

// k-th moment of the full limit for `label`: root moment times the Beta
// factor moments.
double limit_moment(const Label& label, unsigned k, const ModelKind& model);

// True when the root limit has a closed-form distribution we can sample and
// evaluate (linear with beta == 0; out-degree with beta == 1).
bool has_closed_form_root(const ModelKind& model);

// CDF of the root limit in the closed-form cases: sqrt(2)|N(0,1)| for the
// linear model at beta == 0, and 2 sqrt(Exp(1)) for the out-degree model at
// beta == 1.
double root_limit_cdf(const ModelKind& model, double t);

// Draws the limit variable of `label` in the closed-form cases. All Beta
// factors there have first parameter 1, so inversion sampling applies.
double sample_limit_special(const Label& label, const ModelKind& model,
                            RandomStream& rng);

// Normalizer c_n(k) = prod_{i=1}^{n-1} (1 + k / (i (1 + beta) - 1)) of the
// degree martingale in the out-degree model, and its logarithm.
double port_normalizer(std::uint64_t n, unsigned k, double beta);
double log_port_normalizer(std::uint64_t n, unsigned k, double beta);

// Z_n = binom(X_n + k + beta - 1, k) / c_n(k) where X_n is the degree of the
// root after n vertices; E[Z_{n+1} | X_n] = Z_n exactly. Computed in log
// space to stay finite for large n.
double port_martingale_value(std::uint32_t degree, std::uint64_t n, unsigned k,
                             double beta);

}  // namespace famtree

#endif  // FAMTREE_LIMIT_LAWS_HPP_
