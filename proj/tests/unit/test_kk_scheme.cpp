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

#include <cmath>
#include <functional>
#include <limits>

#include "../support/oracles.hpp"
#include "kkmds/error.hpp"
#include "kkmds/kk_scheme.hpp"

using namespace kkmds;

namespace {

// Best stress over every layout whose points are net points.
double net_optimum(const DistanceMatrix& d, const EpsNet& net) {
  const std::size_t n = d.size();
  std::vector<std::size_t> pick(n, 0);
  double best = std::numeric_limits<double>::infinity();
  Layout x(n, net.dim());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto p = net.point(pick[i]);
        std::copy(p.begin(), p.end(), x.point(i).begin());
      }
      best = std::min(best, testing::reference_stress(x, d));
      return;
    }
    for (std::size_t s = 0; s < net.size(); ++s) {
      pick[k] = s;
      rec(k + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_SUITE("kk_scheme") {
  TEST_CASE("P2 in one dimension is laid out exactly") {
    SchemeParams p;
    p.dim = 1;
    p.radius = 1.0;
    p.eps1 = 0.5;
    p.t0 = 2;
    const SchemeResult r = kk_scheme(apsp(gen_path(2)), p);
    CHECK(r.stress == 0.0);
    CHECK(r.net_size == 3);
  }

  TEST_CASE("output stays in the ball and reports its own stress") {
    const DistanceMatrix d = apsp(gen_cycle(8));
    SchemeParams p;
    p.radius = 2.0;
    p.eps1 = 0.4;
    p.seed = 4;
    const SchemeResult r = kk_scheme(d, p);
    for (std::size_t i = 0; i < 8; ++i) {
      double len = 0.0;
      for (double v : r.layout.point(i)) len += v * v;
      CHECK(std::sqrt(len) <= p.radius + 1e-12);
    }
    CHECK(r.stress == doctest::Approx(testing::reference_stress(r.layout, d)).epsilon(1e-12));
    CHECK(r.assignment.size() == 8);
  }

  TEST_CASE("full prefix without symmetry pinning finds the net optimum") {
    const DistanceMatrix d = apsp(gen_path(3));
    SchemeParams p;
    p.dim = 1;
    p.radius = 1.0;
    p.eps1 = 0.25;
    p.t0 = 3;
    p.symmetry_reduction = false;
    const SchemeResult r = kk_scheme(d, p);
    CHECK(r.stress == doctest::Approx(net_optimum(d, build_net(1.0, 0.25, 1))).epsilon(1e-12));
  }

  TEST_CASE("micro instances stay within the additive guarantee") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const DistanceMatrix d = apsp(gen_path(n));
      SchemeParams p;
      p.dim = 1;
      p.radius = 1.0;
      p.eps1 = 0.3;
      p.t0 = 2;
      const EpsNet net = build_net(p.radius, p.eps1, p.dim);
      REQUIRE(net.size() <= 5);
      const double opt = net_optimum(d, net);
      const double slack = 0.25 * scheme_payoff_bound(p.radius) * static_cast<double>(n * n);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        p.seed = seed;
        CHECK(kk_scheme(d, p).stress <= opt + slack);
      }
    }
  }

  TEST_CASE("metrics with a minimum distance other than one are rescaled") {
    const DistanceMatrix d = apsp(gen_path(2)).scaled(2.0);
    SchemeParams p;
    p.dim = 1;
    p.radius = 1.0;
    p.eps1 = 0.5;
    p.t0 = 2;
    const SchemeResult r = kk_scheme(d, p);
    CHECK(r.stress == 0.0);
    CHECK(std::abs(r.layout(0, 0) - r.layout(1, 0)) == doctest::Approx(2.0));
  }

  TEST_CASE("restarts: one trial equals a single run, more trials never hurt") {
    const DistanceMatrix d = apsp(gen_cycle(7));
    SchemeParams p;
    p.radius = 2.0;
    p.eps1 = 0.5;
    p.seed = 3;
    const SchemeResult single = kk_scheme(d, p);
    const RestartResult one = run_with_restarts(d, p);
    CHECK(one.best_stress == single.stress);
    CHECK(one.layout == single.layout);
    p.trials = 6;
    const RestartResult six = run_with_restarts(d, p);
    CHECK(six.best_stress <= one.best_stress);
    CHECK(six.trials.size() == 6);
    CHECK(six.trials[5].seed == 8);
    const std::string csv = trials_to_csv(six.trials);
    CHECK(csv.rfind("trial,seed,stress,normalized_stress,seconds\n", 0) == 0);
  }

  TEST_CASE("bounds and validation") {
    CHECK(scheme_payoff_bound(2.5) == 36.0);
    SchemeParams p;
    p.radius = 2.0;
    p.eps1 = 0.5;
    p.eps2 = 0.1;
    CHECK(scheme_error_bound(p, 10) == doctest::Approx(4 * 0.5 * 2 * 100 + 0.1 * 4 * 100));
    const DistanceMatrix d = apsp(gen_path(3));
    p.eps1 = 3.0;
    CHECK_THROWS_AS(kk_scheme(d, p), Error);
    p.eps1 = 0.5;
    p.t0 = 4;
    CHECK_THROWS_AS(kk_scheme(d, p), Error);
  }
}
