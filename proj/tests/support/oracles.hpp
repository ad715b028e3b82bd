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

// Independent reference implementations used by the unit and acceptance
// tests. Each is written from the definitions without calling the code under
// test for the quantity being checked.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "kkmds/graph.hpp"
#include "kkmds/hooks.hpp"
#include "kkmds/stress.hpp"

namespace kkmds::testing {

// Hop distances by Floyd-Warshall; infinity for unreachable pairs.
inline std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Stress from the definition, summed over ordered pairs and halved.
inline double reference_stress(const Layout& x, const DistanceMatrix& d) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      double s = 0.0;
      for (std::size_t k = 0; k < x.dim(); ++k) s += (x(i, k) - x(j, k)) * (x(i, k) - x(j, k));
      const double r = std::sqrt(s) / d(i, j) - 1.0;
      total += r * r;
    }
  return total / 2.0;
}

// Global observer asserting the energy lower bound n^2 / (81 (10 D)^r) on
// every layout any method returns, whenever the diameter hypothesis holds.
struct BoundLedger {
  std::mutex mu;
  std::size_t checked = 0;
  std::size_t applicable = 0;
  std::vector<std::string> violations;
};

inline BoundLedger& bound_ledger() {
  static BoundLedger ledger;
  return ledger;
}

inline void install_bound_hook() {
  set_layout_hook([](std::string_view method, const Layout& x, const DistanceMatrix& d) {
    auto& ledger = bound_ledger();
    std::lock_guard<std::mutex> lock(ledger.mu);
    ++ledger.checked;
    if (!d.is_integral() || d.min_distance() < 1.0 || x.size() < 2) return;
    const double n = static_cast<double>(x.size());
    const double D = d.diameter();
    const double r = static_cast<double>(x.dim());
    if (D > std::pow(n / 2.0, 1.0 / r) / 10.0) return;
    ++ledger.applicable;
    const double bound = n * n / (81.0 * std::pow(10.0 * D, r));
    const double e = reference_stress(x, d);
    if (!(e >= bound)) {
      ledger.violations.push_back(std::string(method) + ": n=" + std::to_string(x.size()) + " stress " +
                                  std::to_string(e) + " < bound " + std::to_string(bound));
    }
  });
}

}  // namespace kkmds::testing
