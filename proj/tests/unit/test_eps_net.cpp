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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "kkmds/eps_net.hpp"
#include "kkmds/error.hpp"
#include "kkmds/graph.hpp"
#include "kkmds/random.hpp"

using namespace kkmds;

namespace {

std::vector<double> random_in_ball(std::size_t dim, double radius, Rng& rng) {
  std::vector<double> p(dim);
  double len = 0.0;
  for (double& v : p) {
    v = rng.normal();
    len += v * v;
  }
  len = std::sqrt(len);
  const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(dim));
  for (double& v : p) v *= r / len;
  return p;
}

// Counts grid points of spacing 2 eps / sqrt(dim) within R + eps, by direct
// recursion over the coordinates.
std::size_t grid_count(double radius, double eps, std::size_t dim) {
  const double h = 2.0 * eps / std::sqrt(static_cast<double>(dim));
  const long half = static_cast<long>(std::floor((radius + eps) / h));
  std::size_t count = 0;
  std::vector<long> idx(dim, -half);
  std::function<void(std::size_t, double)> rec = [&](std::size_t k, double sq) {
    if (k == dim) {
      if (std::sqrt(sq) <= radius + eps) ++count;
      return;
    }
    for (long i = -half; i <= half; ++i) rec(k + 1, sq + (i * h) * (i * h));
  };
  rec(0, 0.0);
  return count;
}

}  // namespace

TEST_SUITE("eps_net") {
  TEST_CASE("every point of the ball is within eps of the net") {
    Rng rng(17);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      for (double eps : {0.1, 0.25, 0.6}) {
        const EpsNet net = build_net(1.5, eps, dim);
        for (int t = 0; t < 400; ++t) {
          const auto p = random_in_ball(dim, 1.5, rng);
          const auto q = net.point(net.nearest(p));
          REQUIRE(distance(p, q) <= eps + 1e-12);
        }
      }
    }
  }

  TEST_CASE("net points lie in the ball and respect the size bound") {
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      for (double eps : {0.1, 0.2, 0.5}) {
        const EpsNet net = build_net(1.0, eps, dim);
        CHECK(static_cast<double>(net.size()) <= net_size_bound(1.0, eps, dim));
        for (std::size_t i = 0; i < net.size(); ++i) {
          double len = 0.0;
          for (double v : net.point(i)) len += v * v;
          CHECK(std::sqrt(len) <= 1.0 + 1e-12);
        }
        // Clamping can only merge points, never add them.
        CHECK(net.size() <= grid_count(1.0, eps, dim));
      }
    }
  }

  TEST_CASE("grid enumeration matches an independent count in one dimension") {
    // On a line, clamped points collapse onto the two endpoints only.
    const EpsNet net = build_net(1.0, 0.15, 1);
    std::set<double> xs;
    const double h = 0.3;
    for (long i = -10; i <= 10; ++i) {
      const double x = i * h;
      if (std::abs(x) <= 1.15) xs.insert(std::clamp(x, -1.0, 1.0));
    }
    CHECK(net.size() == xs.size());
  }

  TEST_CASE("eps at least R gives the origin alone") {
    const EpsNet net = build_net(1.0, 1.0, 2);
    REQUIRE(net.size() == 1);
    CHECK(net.point(0)[0] == 0.0);
    CHECK(net.point(0)[1] == 0.0);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_net(0.0, 0.1, 2), Error);
    CHECK_THROWS_AS(build_net(1.0, -0.1, 2), Error);
    CHECK_THROWS_AS(build_net(1.0, 0.1, 0), Error);
    try {
      build_net(100.0, 0.001, 3);
      FAIL("expected resource guard");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kResource);
    }
  }

  TEST_CASE("nearest breaks ties towards the lowest index") {
    const EpsNet net = build_net(1.0, 0.5, 1);
    // Points lie on multiples of 1.0 clamped to [-1, 1]: {-1, 0, 1}.
    REQUIRE(net.size() == 3);
    const std::vector<double> mid = {0.5};
    CHECK(net.nearest(mid) == 1);
    const std::vector<double> left = {-0.5};
    CHECK(net.nearest(left) == 0);
  }

  TEST_CASE("bucket search agrees with the linear scan") {
    const EpsNet net = build_net(1.0, 0.08, 3);
    REQUIRE(net.size() > EpsNet::kLinearScanLimit);
    Rng rng(23);
    for (int t = 0; t < 2000; ++t) {
      const auto p = random_in_ball(3, 1.0, rng);
      REQUIRE(net.nearest(p) == net.nearest_linear(p));
    }
  }

  TEST_CASE("snapping moves stress by at most 4 eps R n^2") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng.below(15);
      const std::size_t dim = 1 + rng.below(3);
      const double eps = t % 2 ? 0.1 : 0.2;
      Layout x(n, dim);
      for (std::size_t i = 0; i < n; ++i) {
        const auto p = random_in_ball(dim, 1.0, rng);
        std::copy(p.begin(), p.end(), x.point(i).begin());
      }
      const DistanceMatrix d = apsp(gen_complete(n));
      const EpsNet net = build_net(1.0, eps, dim);
      const SnapResult s = snap(x, net);
      CHECK(s.projected == 0);
      for (std::size_t i = 0; i < n; ++i) CHECK(distance(x.point(i), s.layout.point(i)) <= eps + 1e-12);
      CHECK(std::abs(stress(s.layout, d) - stress(x, d)) <= 4.0 * eps * 1.0 * n * n);
    }
  }

  TEST_CASE("points outside the ball are projected and counted") {
    const EpsNet net = build_net(1.0, 0.2, 2);
    const Layout x(2, 2, {3.0, 0.0, 0.0, 0.1});
    const SnapResult s = snap(x, net);
    CHECK(s.projected == 1);
    CHECK(s.layout(0, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(snap(Layout(2, 1), net), Error);
  }

  TEST_CASE("csv lists one point per row") {
    const EpsNet net = build_net(1.0, 0.5, 2);
    const std::string csv = net.to_csv();
    CHECK(csv.rfind("x0,x1\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == net.size() + 1);
  }
}
