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
#include <json.hpp>

#include "../support/oracles.hpp"
#include "kkmds/baselines.hpp"
#include "kkmds/error.hpp"
#include "kkmds/structural.hpp"

using namespace kkmds;

TEST_SUITE("structural") {
  TEST_CASE("energy bound formula and applicability") {
    CHECK(energy_lower_bound_formula(1000, 2.0, 1) == doctest::Approx(1e6 / 1620.0));
    CHECK(energy_lower_bound(1000, 2.0, 1).value() == doctest::Approx(617.2839506));
    CHECK_FALSE(energy_lower_bound(10, 5.0, 1).has_value());
    CHECK_FALSE(energy_lower_bound(3, 1.0, 2).has_value());
    // Hypothesis boundary: (n/2)^(1/r) / 10 == D exactly.
    CHECK(energy_lower_bound(200, 1.0, 2).has_value());
    CHECK(energy_lower_bound(200, 10.0, 1).has_value());
    CHECK_FALSE(energy_lower_bound(200, 10.5, 1).has_value());
    CHECK(energy_lower_bound(200, 1.0, 2).value() == doctest::Approx(40000.0 / 8100.0));
  }

  TEST_CASE("diameter bound") {
    CHECK(diameter_upper_bound(1.0) == doctest::Approx(8.0));
    CHECK(diameter_upper_bound(2.0) == doctest::Approx(24.0));
    CHECK(diameter_upper_bound(8.0) == doctest::Approx(128.0));
    CHECK_THROWS_AS(diameter_upper_bound(0.5), Error);
  }

  TEST_CASE("layout diameter and check") {
    const Layout x(3, 2, {0, 0, 3, 4, 1, 1});
    CHECK(layout_diameter(x) == doctest::Approx(5.0));
    CHECK(check_diameter(x, 1.0));
    const Layout far(2, 1, {0.0, 9.0});
    CHECK_FALSE(check_diameter(far, 1.0));
  }

  TEST_CASE("marginal median") {
    CHECK(marginal_median(Layout(3, 2, {0, 5, 2, 1, 7, 3})) == std::vector<double>{2.0, 3.0});
    CHECK(marginal_median(Layout(4, 1, {0, 0, 10, 10})) == std::vector<double>{5.0});
  }

  TEST_CASE("concentration profile") {
    const auto rows = concentration_profile(Layout(4, 1, {0, 0, 10, 10}), 1.0, 2.0, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].threshold == 3.0);
    CHECK(rows[0].observed == 4);
    CHECK(rows[2].threshold == 5.0);
    CHECK(rows[2].observed == 4);
    CHECK(concentration_bound(100, 1, 2.0, 3) == doctest::Approx(200.0 * std::pow(2.0, -std::sqrt(8.0))));
    CHECK(concentration_bound(100, 1, 2.0, 3) == doctest::Approx(28.16).epsilon(1e-3));
    CHECK_THROWS_AS(concentration_profile(Layout(2, 1), 1.0, 0.0, 3), Error);
    CHECK_THROWS_AS(concentration_profile(Layout(2, 1), 1.0, 2.0, 0), Error);
  }

  TEST_CASE("clique optimum is stationary with the closed-form energy") {
    for (std::size_t n : {2u, 3u, 4u, 7u, 20u}) {
      const CliqueOptimum opt = clique_optimal(n);
      const DistanceMatrix d = apsp(gen_complete(n));
      CHECK(testing::reference_stress(opt.layout, d) == doctest::Approx(opt.energy).epsilon(1e-10));
      const Layout g = stress_gradient(opt.layout, d);
      for (double v : g.coords()) CHECK(std::abs(v) < 1e-9);
    }
    CHECK(clique_optimal(3).energy == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(clique_optimal(1), Error);
  }

  TEST_CASE("descent on a large clique respects the energy bound") {
    const DistanceMatrix d = apsp(gen_complete(200));
    for (std::size_t dim : {1u, 2u}) {
      GdParams p;
      p.steps = 300;
      p.init_radius = 1.0;
      const GdResult r = gradient_descent(d, dim, p);
      const auto bound = energy_lower_bound(200, 1.0, dim);
      REQUIRE(bound.has_value());
      CHECK(r.stress >= *bound);
      CHECK(check_diameter(r.layout, 1.0));
    }
  }

  TEST_CASE("report") {
    const DistanceMatrix d = apsp(gen_complete(3));
    const Layout x = clique_optimal(3).layout;
    const StructuralReport r = structural_report(x, d, ConcentrationSpec{});
    CHECK(r.n == 3);
    CHECK_FALSE(r.energy_lower_bound.has_value());
    CHECK(r.energy_ok);
    CHECK(r.diameter_ok);
    CHECK(r.diameter_ratio() == doctest::Approx(4.0 / 3.0));
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["energy_lower_bound"].is_null());
    CHECK(j["bound_satisfied"]["diameter"] == true);
    CHECK(j["concentration"].size() == 3);
    CHECK(j["normalized_stress"].get<double>() == doctest::Approx(1.0 / 27.0));
    CHECK_THROWS_AS(structural_report(Layout(2, 1), d), Error);
  }
}
