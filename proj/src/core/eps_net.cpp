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

#include "kkmds/eps_net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kkmds/error.hpp"

namespace kkmds {

namespace {

constexpr double kGridEnumerationLimit = 5e7;

double norm(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return std::sqrt(s);
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

}  // namespace

EpsNet::EpsNet(double radius, double eps, std::size_t dim, double spacing, std::vector<double> points)
    : radius_(radius), eps_(eps), dim_(dim), spacing_(spacing), points_(std::move(points)) {
  if (dim_ == 0 || points_.empty() || points_.size() % dim_ != 0) throw_parameter("malformed net");
  if (size() <= kLinearScanLimit) return;
  cell_offset_ = static_cast<long>(std::ceil((radius_ + spacing_) / spacing_)) + 1;
  cells_per_axis_ = 2 * cell_offset_ + 1;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto cell = cell_of(point(i));
    buckets_[cell_key(cell)].push_back(i);
  }
}

std::vector<long> EpsNet::cell_of(std::span<const double> p) const {
  std::vector<long> c(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    long v = static_cast<long>(std::floor(p[k] / spacing_));
    c[k] = std::clamp(v, -cell_offset_, cell_offset_);
  }
  return c;
}

long EpsNet::cell_key(std::span<const long> cell) const {
  long key = 0;
  for (long c : cell) key = key * cells_per_axis_ + (c + cell_offset_);
  return key;
}

std::size_t EpsNet::nearest_linear(std::span<const double> p) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) {
    const double d = sq_dist(p, point(i));
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::size_t EpsNet::nearest(std::span<const double> p) const {
  if (p.size() != dim_) throw_parameter("query dimension does not match the net");
  if (buckets_.empty()) return nearest_linear(p);

  const auto centre = cell_of(p);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  double best_d = std::numeric_limits<double>::infinity();
  std::vector<long> offset(dim_);
  std::vector<long> cell(dim_);
  for (long ring = 0; ring <= cells_per_axis_; ++ring) {
    // Visit every cell on the Chebyshev shell of the given radius.
    std::fill(offset.begin(), offset.end(), -ring);
    while (true) {
      long cheb = 0;
      for (long o : offset) cheb = std::max(cheb, std::abs(o));
      if (cheb == ring) {
        bool inside = true;
        for (std::size_t k = 0; k < dim_; ++k) {
          cell[k] = centre[k] + offset[k];
          if (cell[k] < -cell_offset_ || cell[k] > cell_offset_) inside = false;
        }
        if (inside) {
          auto it = buckets_.find(cell_key(cell));
          if (it != buckets_.end()) {
            for (std::size_t i : it->second) {
              const double d = sq_dist(p, point(i));
              if (d < best_d || (d == best_d && i < best)) {
                best_d = d;
                best = i;
              }
            }
          }
        }
      }
      std::size_t k = 0;
      while (k < dim_ && offset[k] == ring) offset[k++] = -ring;
      if (k == dim_) break;
      ++offset[k];
    }
    // Anything on a later shell is at least ring * spacing away.
    const double reach = static_cast<double>(ring) * spacing_;
    if (best != std::numeric_limits<std::size_t>::max() && std::sqrt(best_d) < reach) break;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return nearest_linear(p);
  return best;
}

std::size_t EpsNet::origin_index() const {
  const std::vector<double> origin(dim_, 0.0);
  return nearest_linear(origin);
}

std::string EpsNet::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t k = 0; k < dim_; ++k) out << (k ? "," : "") << "x" << k;
  out << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    const auto p = point(i);
    for (std::size_t k = 0; k < dim_; ++k) out << (k ? "," : "") << p[k];
    out << '\n';
  }
  return out.str();
}

double net_size_bound(double radius, double eps, std::size_t dim) {
  return std::pow(3.0 * radius / eps, static_cast<double>(dim));
}

EpsNet build_net(double radius, double eps, std::size_t dim) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw_parameter("net radius must be positive");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw_parameter("net eps must be positive");
  if (dim == 0) throw_parameter("net dimension must be positive");
  if (eps >= radius) return EpsNet(radius, eps, dim, 2.0 * eps, std::vector<double>(dim, 0.0));

  const double spacing = 2.0 * eps / std::sqrt(static_cast<double>(dim));
  const double reach = radius + eps;
  const long half = static_cast<long>(std::floor(reach / spacing));
  const double per_axis = static_cast<double>(2 * half + 1);
  if (std::pow(per_axis, static_cast<double>(dim)) > kGridEnumerationLimit) {
    throw_resource("net grid too large to enumerate (" + std::to_string(2 * half + 1) + "^" +
                   std::to_string(dim) + " cells)");
  }

  std::vector<double> points;
  std::vector<long> idx(dim, -half);
  std::vector<double> p(dim);
  while (true) {
    for (std::size_t k = 0; k < dim; ++k) p[k] = static_cast<double>(idx[k]) * spacing;
    const double len = norm(p);
    if (len <= reach) {
      if (len > radius) {
        for (double& v : p) v *= radius / len;
      }
      points.insert(points.end(), p.begin(), p.end());
    }
    // Last axis varies fastest, so points come out in lexicographic order.
    std::size_t k = dim;
    while (k > 0 && idx[k - 1] == half) idx[--k] = -half;
    if (k == 0) break;
    ++idx[k - 1];
  }

  // Drop exact duplicates created by clamping, keeping the first occurrence.
  std::vector<double> unique_points;
  const std::size_t count = points.size() / dim;
  for (std::size_t i = 0; i < count; ++i) {
    std::span<const double> q(points.data() + i * dim, dim);
    bool dup = false;
    if (std::abs(norm(q) - radius) < 1e-12 * radius) {
      for (std::size_t j = 0; j * dim < unique_points.size() && !dup; ++j)
        dup = std::equal(q.begin(), q.end(), unique_points.begin() + static_cast<long>(j * dim));
    }
    if (!dup) unique_points.insert(unique_points.end(), q.begin(), q.end());
  }

  EpsNet net(radius, eps, dim, spacing, std::move(unique_points));
  if (dim <= 3 && eps <= radius * (3.0 - std::sqrt(3.0)) * 0.9 &&
      static_cast<double>(net.size()) > net_size_bound(radius, eps, dim)) {
    throw_invariant("net size " + std::to_string(net.size()) + " exceeds the (3R/eps)^r bound");
  }
  return net;
}

SnapResult snap(const Layout& x, const EpsNet& net) {
  if (x.dim() != net.dim()) {
    throw_parameter("layout dimension " + std::to_string(x.dim()) + " does not match net dimension " +
                    std::to_string(net.dim()));
  }
  SnapResult out{Layout(x.size(), x.dim()), std::vector<std::size_t>(x.size()), 0};
  std::vector<double> p(x.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto src = x.point(i);
    std::copy(src.begin(), src.end(), p.begin());
    const double len = norm(p);
    if (len > net.radius()) {
      for (double& v : p) v *= net.radius() / len;
      ++out.projected;
    }
    const std::size_t idx = net.nearest(p);
    out.indices[i] = idx;
    const auto q = net.point(idx);
    std::copy(q.begin(), q.end(), out.layout.point(i).begin());
  }
  return out;
}

}  // namespace kkmds
