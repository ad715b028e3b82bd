// Copyright 2026 The kkmds Authors
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

#include "kkmds/stress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kkmds/error.hpp"

namespace kkmds {

namespace {

void check_dims(const Layout& x, const DistanceMatrix& d) {
  if (x.size() != d.size()) {
    throw_parameter("layout has " + std::to_string(x.size()) + " points but the metric has " +
                    std::to_string(d.size()));
  }
}

inline double pair_term(const Layout& x, const DistanceMatrix& d, std::size_t i, std::size_t j) {
  const double r = distance(x.point(i), x.point(j)) / d(i, j) - 1.0;
  return r * r;
}

void check_indices(std::span<const std::size_t> s, std::size_t n) {
  for (std::size_t i : s)
    if (i >= n) throw_parameter("vertex " + std::to_string(i) + " out of range");
}

}  // namespace

Layout::Layout(std::size_t n, std::size_t dim) : n_(n), dim_(dim), x_(n * dim, 0.0) {
  if (dim == 0) throw_parameter("layout dimension must be positive");
}

Layout::Layout(std::size_t n, std::size_t dim, std::vector<double> coords)
    : n_(n), dim_(dim), x_(std::move(coords)) {
  if (dim == 0) throw_parameter("layout dimension must be positive");
  if (x_.size() != n * dim) throw_parameter("layout needs n*dim coordinates");
  if (!all_finite()) throw_invariant("layout coordinates must be finite");
}

bool Layout::all_finite() const noexcept {
  return std::all_of(x_.begin(), x_.end(), [](double v) { return std::isfinite(v); });
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return std::sqrt(s);
}

double stress(const Layout& x, const DistanceMatrix& d) {
  check_dims(x, d);
  const std::size_t n = x.size();
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e += pair_term(x, d, i, j);
  return e;
}

double stress_subset(const Layout& x, const DistanceMatrix& d, std::span<const std::size_t> subset) {
  check_dims(x, d);
  check_indices(subset, x.size());
  std::vector<std::size_t> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  double e = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) e += pair_term(x, d, s[a], s[b]);
  return e;
}

double stress_cross(const Layout& x, const DistanceMatrix& d, std::span<const std::size_t> s,
                    std::span<const std::size_t> t) {
  check_dims(x, d);
  check_indices(s, x.size());
  check_indices(t, x.size());
  std::vector<char> in_s(x.size(), 0);
  for (std::size_t i : s) in_s[i] = 1;
  for (std::size_t j : t)
    if (in_s[j]) throw_parameter("stress_cross: vertex " + std::to_string(j) + " is in both sets");
  double e = 0.0;
  for (std::size_t i : s)
    for (std::size_t j : t) e += pair_term(x, d, i, j);
  return e;
}

WeightMeasure::WeightMeasure(std::vector<double> weights) : w_(std::move(weights)) {
  double total = 0.0;
  for (double w : w_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw_parameter("weights must be nonnegative and finite");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw_parameter("weights must sum to 1");
}

WeightMeasure WeightMeasure::uniform(std::size_t n) {
  if (n == 0) throw_parameter("uniform measure needs n >= 1");
  return WeightMeasure(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double weighted_stress(const Layout& x, const DistanceMatrix& d, const WeightMeasure& mu) {
  check_dims(x, d);
  if (mu.size() != x.size()) throw_parameter("weight measure size does not match the layout");
  const std::size_t n = x.size();
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e += mu[i] * mu[j] * pair_term(x, d, i, j);
  return static_cast<double>(n) * static_cast<double>(n) * e;
}

double stress_and_gradient(const Layout& x, const DistanceMatrix& d, Layout& grad) {
  check_dims(x, d);
  const std::size_t n = x.size();
  const std::size_t r = x.dim();
  if (grad.size() != n || grad.dim() != r) grad = Layout(n, r);
  std::fill(grad.coords().begin(), grad.coords().end(), 0.0);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = x.point(i);
    auto gi = grad.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = x.point(j);
      const double dij = d(i, j);
      const double norm = distance(xi, xj);
      const double resid = norm / dij - 1.0;
      e += resid * resid;
      if (norm == 0.0) continue;
      const double coef = 2.0 * resid / (dij * norm);
      auto gj = grad.point(j);
      for (std::size_t k = 0; k < r; ++k) {
        const double g = coef * (xi[k] - xj[k]);
        gi[k] += g;
        gj[k] -= g;
      }
    }
  }
  return e;
}

Layout stress_gradient(const Layout& x, const DistanceMatrix& d) {
  Layout grad(x.size(), x.dim() == 0 ? 1 : x.dim());
  stress_and_gradient(x, d, grad);
  return grad;
}

}  // namespace kkmds
