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
#include <optional>
#include <string>
#include <vector>

#include "kkmds/graph.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

// n^2 / (81 (10 D)^r), without checking when it applies.
double energy_lower_bound_formula(std::size_t n, double diameter, std::size_t dim);

// The bound above when D <= (n/2)^(1/r) / 10, otherwise nullopt. Every layout
// of a metric with that diameter has at least this much stress.
std::optional<double> energy_lower_bound(std::size_t n, double diameter, std::size_t dim);

// 8D + 4D log2 log2 (2D), the log-log term clamped at zero. D >= 1.
double diameter_upper_bound(double diameter);

// Largest pairwise Euclidean distance.
double layout_diameter(const Layout& x);
bool check_diameter(const Layout& x, double diameter);

// Per-coordinate median; even n averages the two middle order statistics.
std::vector<double> marginal_median(const Layout& x);

struct ConcentrationRow {
  double c = 0.0;
  std::size_t k = 0;
  double threshold = 0.0;  // (C + k) D
  std::size_t observed = 0;
  double bound = 0.0;  // 2 r n C^-sqrt(2^k)
};

// Rows k = 1..k_max counting points at L-infinity distance >= (C + k) D from
// the marginal median. The bound is only proved for global optima.
std::vector<ConcentrationRow> concentration_profile(const Layout& x, double diameter, double c, std::size_t k_max);

double concentration_bound(std::size_t n, std::size_t dim, double c, std::size_t k);

struct CliqueOptimum {
  Layout layout;  // 1-D
  double energy = 0.0;
};

// y_i = (2i - (n + 1)) / n for i = 1..n, energy (n - 1)(n - 2) / 6.
CliqueOptimum clique_optimal(std::size_t n);

struct StructuralReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  double diameter = 0.0;  // metric diameter D
  double stress = 0.0;
  std::optional<double> energy_lower_bound;
  double diameter_bound = 0.0;
  double layout_diameter = 0.0;
  bool energy_ok = true;  // vacuously true when the bound does not apply
  bool diameter_ok = true;
  std::vector<ConcentrationRow> concentration;

  double diameter_ratio() const { return diameter > 0.0 ? layout_diameter / diameter : 0.0; }
  std::string to_json() const;
};

struct ConcentrationSpec {
  double c = 2.0;
  std::size_t k_max = 3;
};

StructuralReport structural_report(const Layout& x, const DistanceMatrix& d,
                                   std::optional<ConcentrationSpec> concentration = std::nullopt);

}  // namespace kkmds
