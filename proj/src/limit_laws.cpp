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

#include "famtree/limit_laws.hpp"

#include <cmath>
#include <stdexcept>

#include "famtree/special.hpp"

namespace famtree {

double BetaFactor::moment(unsigned k) const {
  if (degenerate()) return 1.0;
  double m = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    m *= (a + j) / (a + b + j);
  }
  return m;
}

LimitLaw LimitLaw::for_label(const Label& label, const ModelKind& model) {
  LimitLaw law;
  law.model = model;
  law.label = label;
  law.exponent = model.scaling_exponent();
  law.factors.reserve(label.depth());
  for (std::size_t s = 0; s < label.depth(); ++s) {
    double coord = label.path[s];
    if (model.is_linear()) {
      // The first coordinate loses one competitor: when x's ancestor line
      // starts at the root's x_1-th child, only x_1 - 1 earlier siblings
      // compete, and the first child faces none at all.
      double b = s == 0 ? coord - 1.0 : coord;
      law.factors.push_back(BetaFactor{1.0 + model.beta, b});
    } else {
      law.factors.push_back(BetaFactor{model.beta, coord});
    }
  }
  return law;
}

double zeta0_moment_linear(unsigned k, double beta) {
  if (!(beta > -1.0)) throw std::domain_error("requires beta > -1");
  double delta = 1.0 / (2.0 + beta);
  return std::exp(log_gamma(1.0 + beta * delta) - log_gamma(beta + 1.0) +
                  log_gamma(k + beta + 1.0) -
                  log_gamma(1.0 + (k + beta) * delta));
}

double zeta0_moment_linear_binomial_form(unsigned k, double beta) {
  if (!(beta > -1.0)) throw std::domain_error("requires beta > -1");
  double delta = 1.0 / (2.0 + beta);
  double factorial = 1.0;
  for (unsigned j = 2; j <= k; ++j) factorial *= j;
  double binom = std::exp(log_gamma(k + beta + 1.0) - log_gamma(k + 1.0) -
                          log_gamma(beta + 1.0));
  return factorial *
         std::exp(log_gamma(1.0 + beta * delta) -
                  log_gamma(1.0 + (k + beta) * delta)) *
         binom;
}

double zeta0_moment_port(unsigned k, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("requires beta > 0");
  double delta = 1.0 / (1.0 + beta);
  return std::exp(log_gamma(beta * delta) + log_gamma(k + beta) -
                  log_gamma((k + beta) * delta) - log_gamma(beta));
}

double zeta0_moment(unsigned k, const ModelKind& model) {
  return model.is_linear() ? zeta0_moment_linear(k, model.beta)
                           : zeta0_moment_port(k, model.beta);
}

double limit_moment(const Label& label, unsigned k, const ModelKind& model) {
  LimitLaw law = LimitLaw::for_label(label, model);
  double m = zeta0_moment(k, model);
  for (const BetaFactor& factor : law.factors) {
    m *= factor.moment(k);
  }
  return m;
}

bool has_closed_form_root(const ModelKind& model) {
  return model.is_linear() ? model.beta == 0.0 : model.beta == 1.0;
}

double root_limit_cdf(const ModelKind& model, double t) {
  if (!has_closed_form_root(model)) {
    throw std::logic_error("no closed-form root law for this model");
  }
  return model.is_linear() ? scaled_half_normal_cdf(t)
                           : scaled_sqrt_exponential_cdf(t);
}

double sample_limit_special(const Label& label, const ModelKind& model,
                            RandomStream& rng) {
  if (!has_closed_form_root(model)) {
    throw std::logic_error("no closed-form root law for this model");
  }
  double value = model.is_linear() ? std::sqrt(2.0) * std::fabs(rng.normal())
                                   : 2.0 * std::sqrt(rng.exponential());
  LimitLaw law = LimitLaw::for_label(label, model);
  for (const BetaFactor& factor : law.factors) {
    if (factor.degenerate()) continue;
    // In both closed-form cases every factor is Beta(1, b), which inverts to
    // 1 - (1 - u)^(1/b).
    double u = rng.uniform();
    value *= 1.0 - std::pow(1.0 - u, 1.0 / factor.b);
  }
  return value;
}

double log_port_normalizer(std::uint64_t n, unsigned k, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("requires beta > 0");
  KahanSum log_sum;
  for (std::uint64_t i = 1; i < n; ++i) {
    double s_i = static_cast<double>(i) * (1.0 + beta) - 1.0;
    log_sum.add(std::log1p(k / s_i));
  }
  return log_sum.value();
}

double port_normalizer(std::uint64_t n, unsigned k, double beta) {
  return std::exp(log_port_normalizer(n, k, beta));
}

double port_martingale_value(std::uint32_t degree, std::uint64_t n, unsigned k,
                             double beta) {
  double x = degree;
  double log_binom = log_gamma(x + k + beta) - log_gamma(k + 1.0) -
                     log_gamma(x + beta);
  return std::exp(log_binom - log_port_normalizer(n, k, beta));
}

}  // namespace famtree
