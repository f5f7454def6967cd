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

#ifndef FAMTREE_SPECIAL_HPP_
#define FAMTREE_SPECIAL_HPP_

#include <cstddef>

namespace famtree {

// log Gamma(x) for x > 0 (Lanczos approximation, ~15 significant digits).
double log_gamma(double x);

// log Beta(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a + b).
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b), the Beta(a, b) CDF at x. Continued
// fraction (modified Lentz), a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// CDF of the Beta(a, b) distribution.
double beta_cdf(double a, double b, double x);

// CDF of |N(0, 1)| scaled by sqrt(2): P(sqrt(2) |Z| <= t) = erf(t / 2).
double scaled_half_normal_cdf(double t);

// CDF of 2 sqrt(E), E standard exponential: 1 - exp(-t^2 / 4).
double scaled_sqrt_exponential_cdf(double t);

// Compensated accumulator for long sums of small terms.
class KahanSum {
 public:
  void add(double x) noexcept {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace famtree

#endif  // FAMTREE_SPECIAL_HPP_
