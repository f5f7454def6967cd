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

#include "famtree/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "famtree/special.hpp"

namespace famtree {

MomentEstimate empirical_moment(std::span<const double> sample, unsigned k) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  KahanSum sum;
  KahanSum sum_sq;
  for (double x : sample) {
    double p = std::pow(x, static_cast<double>(k));
    sum.add(p);
    sum_sq.add(p * p);
  }
  double n = static_cast<double>(sample.size());
  MomentEstimate est;
  est.k = k;
  est.value = sum.value() / n;
  if (sample.size() > 1) {
    double var = (sum_sq.value() - n * est.value * est.value) / (n - 1.0);
    est.std_error = std::sqrt(std::max(var, 0.0) / n);
  }
  return est;
}

std::vector<MomentEstimate> empirical_moments(std::span<const double> sample,
                                              unsigned max_k) {
  std::vector<MomentEstimate> out;
  out.reserve(max_k);
  for (unsigned k = 1; k <= max_k; ++k) {
    out.push_back(empirical_moment(sample, k));
  }
  return out;
}

double ExactDistribution::mean() const {
  double m = 0.0;
  for (const auto& [degree, p] : pmf) m += degree * p;
  return m;
}

double ExactDistribution::probability(std::uint32_t degree) const {
  auto it = pmf.find(degree);
  return it == pmf.end() ? 0.0 : it->second;
}

namespace {

// In-place growth-history enumeration state. Weights are positive for every
// vertex once n >= 2, so each history's probability is a plain product of
// weight ratios.
struct EnumState {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> coord;
  std::vector<std::uint32_t> degree;
  const ModelKind& model;
  const Label& target;
  std::uint64_t n_final;
  std::map<std::uint32_t, KahanSum> mass;

  std::uint32_t out_degree(std::uint32_t v) const {
    return v == 0 ? degree[v] : degree[v] - 1;
  }

  std::uint32_t target_degree() const {
    std::uint32_t v = 0;
    for (std::uint32_t c : target.path) {
      bool found = false;
      for (std::uint32_t u = v + 1; u < degree.size(); ++u) {
        if (parent[u] == v && coord[u] == c) {
          v = u;
          found = true;
          break;
        }
      }
      if (!found) return 0;  // never born: degree 0 by convention
    }
    return degree[v];
  }

  void dfs(double prob) {
    std::uint64_t n = degree.size();
    if (n == n_final) {
      mass[target_degree()].add(prob);
      return;
    }
    double total = total_weight_formula(n, model);
    for (std::uint32_t v = 0; v < n; ++v) {
      double w = vertex_weight(degree[v], out_degree(v), model);
      parent.push_back(v);
      coord.push_back(out_degree(v) + 1);
      degree.push_back(1);
      degree[v] += 1;
      dfs(prob * (w / total));
      degree[v] -= 1;
      parent.pop_back();
      coord.pop_back();
      degree.pop_back();
    }
  }
};

}  // namespace

ExactDistribution enumerate_exact(const Label& label, std::uint64_t n,
                                  const ModelKind& model) {
  if (n < 1 || n > 9) {
    throw std::invalid_argument("exact enumeration supports 1 <= n <= 9");
  }
  ExactDistribution dist;
  if (n == 1) {
    dist.pmf[0] = 1.0;  // lone root; any other label is unborn
    return dist;
  }
  EnumState state{{0, 0}, {0, 1}, {1, 1}, model, label, n, {}};
  state.dfs(1.0);
  for (const auto& [degree, sum] : state.mass) {
    dist.pmf[degree] = sum.value();
  }
  return dist;
}

KsResult ks_one_sample(std::span<const double> sample,
                       const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double f = cdf(sorted[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  KsResult result;
  result.distance = d;
  result.n = sorted.size();
  return result;
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double na = static_cast<double>(sa.size());
  double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  KsResult result;
  result.distance = d;
  result.n = sa.size();
  result.m = sb.size();
  return result;
}

}  // namespace famtree
