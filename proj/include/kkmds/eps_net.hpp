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
#include <unordered_map>
#include <vector>

#include "kkmds/stress.hpp"

namespace kkmds {

// Finite eps-cover of the origin-centred ball of radius R in R^dim.
class EpsNet {
public:
  // Nets above this size answer nearest-point queries through a bucket grid.
  static constexpr std::size_t kLinearScanLimit = 4096;

  EpsNet(double radius, double eps, std::size_t dim, double spacing, std::vector<double> points);

  double radius() const noexcept { return radius_; }
  double eps() const noexcept { return eps_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size() / dim_; }
  std::span<const double> point(std::size_t i) const noexcept { return {points_.data() + i * dim_, dim_}; }

  // Index of the nearest net point; ties go to the lowest index.
  std::size_t nearest(std::span<const double> p) const;
  std::size_t nearest_linear(std::span<const double> p) const;

  // Index of the net point nearest the origin.
  std::size_t origin_index() const;

  std::string to_csv() const;

private:
  std::vector<long> cell_of(std::span<const double> p) const;
  long cell_key(std::span<const long> cell) const;

  double radius_;
  double eps_;
  std::size_t dim_;
  double spacing_;
  std::vector<double> points_;
  long cells_per_axis_ = 0;
  long cell_offset_ = 0;
  std::unordered_map<long, std::vector<std::size_t>> buckets_;
};

// Axis-aligned grid of spacing 2 eps / sqrt(dim) through the origin. Grid
// points within eps of the ball are kept; those outside the ball are pulled
// radially onto its surface. eps >= radius gives the single point {0}.
EpsNet build_net(double radius, double eps, std::size_t dim);

// Upper bound on the size of an eps-net of the radius-R ball: (3R/eps)^dim.
double net_size_bound(double radius, double eps, std::size_t dim);

struct SnapResult {
  Layout layout;
  std::vector<std::size_t> indices;  // net index per point
  std::size_t projected = 0;         // points that were outside the ball
};

// Replaces every point by its nearest net point. Points outside the ball are
// first projected radially onto it.
SnapResult snap(const Layout& x, const EpsNet& net);

}  // namespace kkmds
