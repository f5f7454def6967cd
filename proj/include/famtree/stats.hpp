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

#ifndef FAMTREE_STATS_HPP_
#define FAMTREE_STATS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "famtree/label.hpp"
#include "famtree/model.hpp"

namespace famtree {

// Sample mean of x^k with its standard error.
struct MomentEstimate {
  unsigned k = 1;
  double value = 0.0;
  double std_error = 0.0;
};

MomentEstimate empirical_moment(std::span<const double> sample, unsigned k);
std::vector<MomentEstimate> empirical_moments(std::span<const double> sample,
                                              unsigned max_k);

// Probability mass function over integer degrees.
struct ExactDistribution {
  std::map<std::uint32_t, double> pmf;

  double mean() const;
  double probability(std::uint32_t degree) const;
};

// Exact distribution of deg(x, G_n) for the vertex labeled x, obtained by
// enumerating all (n-1)!/1 growth histories with their probabilities
// (the first step is forced to the root). Exponential in n; capped at n <= 9.
ExactDistribution enumerate_exact(const Label& label, std::uint64_t n,
                                  const ModelKind& model);

struct KsResult {
  double distance = 0.0;   // sup-norm statistic
  std::uint64_t n = 0;     // sample size (first sample for two-sample)
  std::uint64_t m = 0;     // second sample size, 0 for one-sample
};

// One-sample Kolmogorov-Smirnov distance against a continuous CDF.
KsResult ks_one_sample(std::span<const double> sample,
                       const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov distance (merge walk, ties handled by
// advancing both sides through equal values before comparing).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace famtree

#endif  // FAMTREE_STATS_HPP_
