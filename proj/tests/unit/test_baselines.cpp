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

#include "../support/oracles.hpp"
#include "kkmds/baselines.hpp"
#include "kkmds/error.hpp"

using namespace kkmds;

namespace {

std::vector<double> consecutive_distances(const Layout& x) {
  std::vector<double> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(distance(x.point(i), x.point((i + 1) % x.size())));
  return out;
}

double relative_spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *hi;
}

}  // namespace

TEST_SUITE("baselines") {
  TEST_CASE("gradient descent solves P2") {
    GdParams p;
    const GdResult r = gradient_descent(apsp(gen_path(2)), 1, p);
    CHECK(r.stress < 1e-4);
    CHECK(r.trace.front().first == 0);
    CHECK(r.trace.back().first == 4000);
    CHECK(r.trace.size() == 41);
  }

  TEST_CASE("zero steps return the initialisation") {
    GdParams p;
    p.steps = 0;
    p.init = Layout(3, 2, {0, 0, 1, 0, 0, 1});
    const GdResult r = gradient_descent(apsp(gen_complete(3)), 2, p);
    CHECK(r.layout == *p.init);
    CHECK(r.best_step == 0);
  }

  TEST_CASE("K3 on a line never beats one third") {
    const DistanceMatrix d = apsp(gen_complete(3));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      GdParams p;
      p.seed = seed;
      p.steps = 1500;
      CHECK(gradient_descent(d, 1, p).stress >= 1.0 / 3.0 - 1e-6);
    }
  }

  TEST_CASE("best iterate is never worse than the start") {
    const DistanceMatrix d = apsp(gen_cycle(9));
    GdParams p;
    p.lr = 0.2;  // large enough to oscillate
    p.steps = 200;
    p.init = Layout(9, 2);
    Rng rng(3);
    for (double& v : p.init->coords()) v = rng.normal();
    const GdResult r = gradient_descent(d, 2, p);
    CHECK(r.stress <= stress(*p.init, d));
    CHECK(r.stress <= r.final_stress);
  }

  TEST_CASE("divergence is reported") {
    GdParams p;
    p.lr = 1e6;
    p.steps = 50;
    p.init = Layout(4, 1, {0.0, 1e-3, 2e-3, 3e-3});
    CHECK_THROWS_AS(gradient_descent(apsp(gen_complete(4)), 1, p), Error);
    p.lr = -1.0;
    CHECK_THROWS_AS(gradient_descent(apsp(gen_complete(4)), 1, p), Error);
  }

  TEST_CASE("trace csv") {
    CHECK(trace_to_csv({{0, 1.5}, {100, 0.25}}) == "step,stress\n0,1.5\n100,0.25\n");
  }

  TEST_CASE("Laplacian spectra") {
    const auto k3 = laplacian_spectrum(gen_complete(3), false);
    CHECK(k3[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(k3[1] == doctest::Approx(3.0));
    CHECK(k3[2] == doctest::Approx(3.0));
    const auto c4 = laplacian_spectrum(gen_cycle(4), true);
    CHECK(c4.back() == doctest::Approx(2.0));
  }

  TEST_CASE("cycle embeds as a regular polygon") {
    for (bool normalized : {false, true}) {
      const Layout x = spectral_embed(gen_cycle(4), 2, normalized);
      CHECK(relative_spread(consecutive_distances(x)) < 1e-9);
      const Layout y = spectral_embed(gen_cycle(12), 2, normalized);
      CHECK(relative_spread(consecutive_distances(y)) < 1e-9);
    }
  }

  TEST_CASE("path Fiedler vector is monotone") {
    const Layout x = spectral_embed(gen_path(7), 1, false);
    const bool up = x(0, 0) < x(6, 0);
    for (std::size_t i = 0; i + 1 < 7; ++i) CHECK((x(i, 0) < x(i + 1, 0)) == up);
    CHECK(x(0, 0) > 0.0);  // sign convention: first nonzero entry positive
  }

  TEST_CASE("large graphs use the iterative solver") {
    const Layout x = spectral_embed(gen_cycle(2100), 2, false);
    CHECK(relative_spread(consecutive_distances(x)) < 1e-6);
    const Layout p = spectral_embed(gen_path(2050), 1, true);
    const bool up = p(0, 0) < p(2049, 0);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < 2050; ++i) monotone = monotone && ((p(i, 0) < p(i + 1, 0)) == up);
    CHECK(monotone);
  }

  TEST_CASE("spectral preconditions") {
    CHECK_THROWS_AS(spectral_embed(Graph(4, {{0, 1}, {2, 3}}), 2, false), Error);
    CHECK_THROWS_AS(spectral_embed(gen_path(3), 3, false), Error);
  }

  TEST_CASE("optimal scale beats a scan of nearby scales") {
    const Graph g = gen_cycle(10);
    const DistanceMatrix d = apsp(g);
    const Layout x = spectral_embed(g, 2, false);
    const double a = stress_optimal_scale(x, d);
    const double best = stress(scaled_layout(x, a), d);
    for (double f = 0.5; f <= 1.5; f += 0.01) CHECK(best <= stress(scaled_layout(x, a * f), d) + 1e-12);
  }

  TEST_CASE("greedy then gradient never loses to greedy") {
    for (std::size_t n : {5u, 8u}) {
      const DistanceMatrix d = apsp(gen_cycle(n));
      SchemeParams s;
      s.radius = 2.0;
      s.eps1 = 0.5;
      GdParams g;
      g.steps = 500;
      const CombinedResult r = greedy_then_grad(d, s, g);
      CHECK(r.refined.stress <= r.scheme.stress);
    }
    SchemeParams s;
    s.dim = 1;
    s.radius = 1.0;
    s.eps1 = 0.5;
    s.t0 = 2;
    CHECK(greedy_then_grad(apsp(gen_path(2)), s, GdParams{}).refined.stress == 0.0);
  }

  TEST_CASE("restart drivers") {
    const DistanceMatrix d = apsp(gen_cycle(6));
    GdParams g;
    g.steps = 300;
    const RestartResult r = gradient_restarts(d, 2, g, 4);
    CHECK(r.trials.size() == 4);
    double best = r.trials[0].stress;
    for (const auto& t : r.trials) best = std::min(best, t.stress);
    CHECK(r.best_stress == best);
    SchemeParams s;
    s.radius = 2.0;
    s.eps1 = 0.5;
    s.trials = 3;
    CHECK(greedy_grad_restarts(d, s, g).trials.size() == 3);
  }
}
