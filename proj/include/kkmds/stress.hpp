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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kkmds/graph.hpp"

namespace kkmds {

// n points in R^dim, stored row-major.
class Layout {
public:
  Layout() = default;
  Layout(std::size_t n, std::size_t dim);
  Layout(std::size_t n, std::size_t dim, std::vector<double> coords);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<double> point(std::size_t i) noexcept { return {x_.data() + i * dim_, dim_}; }
  std::span<const double> point(std::size_t i) const noexcept { return {x_.data() + i * dim_, dim_}; }
  double& operator()(std::size_t i, std::size_t k) noexcept { return x_[i * dim_ + k]; }
  double operator()(std::size_t i, std::size_t k) const noexcept { return x_[i * dim_ + k]; }

  std::span<double> coords() noexcept { return x_; }
  std::span<const double> coords() const noexcept { return x_; }

  bool all_finite() const noexcept;

  friend bool operator==(const Layout&, const Layout&) = default;

private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> x_;
};

double distance(std::span<const double> a, std::span<const double> b) noexcept;

// Kamada-Kawai stress: sum over i < j of (|x_i - x_j| / d(i,j) - 1)^2,
// accumulated in ascending (i, j) order.
double stress(const Layout& x, const DistanceMatrix& d);

inline double normalized_stress(double stress_value, std::size_t n) {
  return n == 0 ? 0.0 : stress_value / (static_cast<double>(n) * static_cast<double>(n));
}

// Sum over pairs inside `subset`.
double stress_subset(const Layout& x, const DistanceMatrix& d, std::span<const std::size_t> subset);
// Sum over pairs (i in s, j in t); s and t must be disjoint.
double stress_cross(const Layout& x, const DistanceMatrix& d, std::span<const std::size_t> s,
                    std::span<const std::size_t> t);

// Probability weights over the vertex set.
class WeightMeasure {
public:
  explicit WeightMeasure(std::vector<double> weights);
  static WeightMeasure uniform(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const noexcept { return w_[i]; }

private:
  std::vector<double> w_;
};

// n^2 * sum over i < j of mu(i) mu(j) (|x_i - x_j| / d(i,j) - 1)^2.
double weighted_stress(const Layout& x, const DistanceMatrix& d, const WeightMeasure& mu);

// Exact gradient of stress(), same shape as x. Coincident pairs contribute
// zero (a valid subgradient of the norm at the origin).
Layout stress_gradient(const Layout& x, const DistanceMatrix& d);

// Stress and gradient in one pass. The returned stress equals stress(x, d).
double stress_and_gradient(const Layout& x, const DistanceMatrix& d, Layout& grad);

// Layout JSON: {"format": 1, "dim": r, "points": [[...]], "stress": E,
// "normalized_stress": E / n^2}.
std::string layout_to_json(const Layout& x, double stress_value);
std::string layout_to_json(const Layout& x, const DistanceMatrix& d);
Layout layout_from_json(std::string_view text);

}  // namespace kkmds
