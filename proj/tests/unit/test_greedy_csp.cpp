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

#include "kkmds/error.hpp"
#include "kkmds/greedy_csp.hpp"
#include "kkmds/random.hpp"

using namespace kkmds;

namespace {

CspInstance random_csp(std::size_t n, std::size_t sigma, Rng& rng, bool integral = false) {
  CspInstance inst(n, sigma, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (Symbol a = 0; a < sigma; ++a)
        for (Symbol b = 0; b < sigma; ++b)
          inst.set(i, j, a, b, integral ? static_cast<double>(rng.below(3)) - 1.0 : rng.uniform(-1.0, 1.0));
  return inst;
}

// Sum over ordered pairs i != j, as in the dense-CSP literature.
double ordered_value(const CspInstance& inst, const Assignment& a) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) v += inst(i, j, a[i], a[j]);
  return v;
}

// Exhaustive optimum by recursion over all assignments.
double exhaustive_best(const CspInstance& inst) {
  const std::size_t n = inst.variables();
  Assignment a(n, 0);
  double best = -INFINITY;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      best = std::max(best, ordered_value(inst, a) / 2.0);
      return;
    }
    for (Symbol s = 0; s < inst.alphabet(); ++s) {
      a[k] = s;
      rec(k + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_SUITE("greedy_csp") {
  TEST_CASE("tables are symmetric and bounded") {
    CspInstance inst(3, 2, 1.0);
    inst.set(0, 2, 1, 0, 0.5);
    CHECK(inst(0, 2, 1, 0) == 0.5);
    CHECK(inst(2, 0, 0, 1) == 0.5);
    CHECK(inst(2, 0, 1, 0) == 0.0);
    CHECK_THROWS_AS(inst.set(0, 1, 0, 0, 1.5), Error);
    CHECK_THROWS_AS(inst.set(0, 0, 0, 0, 0.1), Error);
    CHECK(inst.negated()(0, 2, 1, 0) == -0.5);
  }

  TEST_CASE("recorded value is half the ordered-pair sum") {
    Rng rng(1);
    const CspInstance inst = random_csp(6, 3, rng);
    for (int t = 0; t < 20; ++t) {
      Assignment a(6);
      for (auto& s : a) s = static_cast<Symbol>(rng.below(3));
      CHECK(csp_value(inst, a) == doctest::Approx(ordered_value(inst, a) / 2.0).epsilon(1e-12));
    }
  }

  TEST_CASE("brute force finds the exhaustive optimum, lexicographically first") {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
      const CspInstance inst = random_csp(2 + rng.below(5), 1 + rng.below(3), rng);
      CHECK(brute_force_csp(inst).value == doctest::Approx(exhaustive_best(inst)).epsilon(1e-12));
    }
    const CspInstance flat(3, 2, 1.0);
    CHECK(brute_force_csp(flat).assignment == Assignment{0, 0, 0});
  }

  TEST_CASE("full prefix reproduces the brute-force optimum exactly") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 1 + rng.below(8);
      const CspInstance inst = random_csp(n, 1 + rng.below(3), rng, t % 2 == 0);
      GreedyOptions opt;
      opt.t0 = n;
      opt.seed = static_cast<std::uint64_t>(t);
      const CspSolution g = greedy_csp(inst, opt);
      CHECK(g.value == brute_force_csp(inst).value);
      CHECK(g.value == csp_value(inst, g.assignment));
    }
  }

  TEST_CASE("greedy never beats the optimum and is deterministic") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const CspInstance inst = random_csp(7, 3, rng);
      GreedyOptions opt;
      opt.t0 = 2;
      opt.seed = 9;
      const CspSolution a = greedy_csp(inst, opt);
      const CspSolution b = greedy_csp(inst, opt);
      CHECK(a.assignment == b.assignment);
      CHECK(a.value <= brute_force_csp(inst).value + 1e-12);
      opt.threads = 3;
      const CspSolution c = greedy_csp(inst, opt);
      CHECK(c.assignment == a.assignment);
    }
  }

  TEST_CASE("greedy extension picks the best reply to placed variables") {
    // Two variables, t0 = 1: the second must answer the first optimally.
    CspInstance inst(2, 3, 1.0);
    inst.set(0, 1, 0, 2, 1.0);
    inst.set(0, 1, 1, 0, 0.5);
    GreedyOptions opt;
    opt.t0 = 1;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      opt.seed = seed;
      CHECK(greedy_csp(inst, opt).value == 1.0);
    }
  }

  TEST_CASE("prefix domains restrict the brute-forced slots") {
    Rng rng(5);
    const CspInstance inst = random_csp(4, 3, rng);
    GreedyOptions opt;
    opt.t0 = 4;
    opt.prefix_domains = {{1}, {1}, {1}, {1}};
    CHECK(greedy_csp(inst, opt).assignment == Assignment{1, 1, 1, 1});
  }

  TEST_CASE("errors and guards") {
    const CspInstance inst(3, 2, 1.0);
    GreedyOptions opt;
    opt.t0 = 4;
    CHECK_THROWS_AS(greedy_csp(inst, opt), Error);
    try {
      brute_force_csp(CspInstance(30, 2, 1.0));
      FAIL("expected resource guard");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kResource);
    }
  }

  TEST_CASE("negated adaptor minimises") {
    Rng rng(6);
    const CspInstance inst = random_csp(5, 2, rng);
    const CspSolution lo = brute_force(Negated<CspInstance>(inst));
    CHECK(-lo.value == doctest::Approx(-brute_force_csp(inst.negated()).value));
  }
}
