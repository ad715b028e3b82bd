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

#include "kkmds/structural.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "kkmds/error.hpp"

namespace kkmds {

double energy_lower_bound_formula(std::size_t n, double diameter, std::size_t dim) {
  const double nn = static_cast<double>(n);
  return nn * nn / (81.0 * std::pow(10.0 * diameter, static_cast<double>(dim)));
}

std::optional<double> energy_lower_bound(std::size_t n, double diameter, std::size_t dim) {
  if (n == 0 || dim == 0 || !(diameter > 0.0)) return std::nullopt;
  const double limit = std::pow(static_cast<double>(n) / 2.0, 1.0 / static_cast<double>(dim)) / 10.0;
  if (diameter > limit) return std::nullopt;
  return energy_lower_bound_formula(n, diameter, dim);
}

double diameter_upper_bound(double diameter) {
  if (!(diameter >= 1.0)) throw_parameter("diameter bound needs D >= 1");
  const double inner = std::log2(2.0 * diameter);
  const double loglog = inner > 1.0 ? std::log2(inner) : 0.0;
  return 8.0 * diameter + 4.0 * diameter * loglog;
}

double layout_diameter(const Layout& x) {
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) best = std::max(best, distance(x.point(i), x.point(j)));
  return best;
}

bool check_diameter(const Layout& x, double diameter) {
  return layout_diameter(x) <= diameter_upper_bound(diameter);
}

std::vector<double> marginal_median(const Layout& x) {
  const std::size_t n = x.size();
  std::vector<double> m(x.dim(), 0.0);
  if (n == 0) return m;
  std::vector<double> col(n);
  for (std::size_t k = 0; k < x.dim(); ++k) {
    for (std::size_t i = 0; i < n; ++i) col[i] = x(i, k);
    std::sort(col.begin(), col.end());
    m[k] = n % 2 == 1 ? col[n / 2] : 0.5 * (col[n / 2 - 1] + col[n / 2]);
  }
  return m;
}

double concentration_bound(std::size_t n, std::size_t dim, double c, std::size_t k) {
  const double expo = std::sqrt(std::pow(2.0, static_cast<double>(k)));
  return 2.0 * static_cast<double>(dim) * static_cast<double>(n) * std::pow(c, -expo);
}

std::vector<ConcentrationRow> concentration_profile(const Layout& x, double diameter, double c, std::size_t k_max) {
  if (!(c > 0.0)) throw_parameter("concentration constant C must be positive");
  if (k_max < 1) throw_parameter("concentration k_max must be at least 1");
  const std::vector<double> m = marginal_median(x);
  std::vector<double> dev(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < x.dim(); ++k) dev[i] = std::max(dev[i], std::abs(x(i, k) - m[k]));

  std::vector<ConcentrationRow> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    ConcentrationRow row;
    row.c = c;
    row.k = k;
    row.threshold = (c + static_cast<double>(k)) * diameter;
    row.observed = static_cast<std::size_t>(std::count_if(dev.begin(), dev.end(), [&](double v) { return v >= row.threshold; }));
    row.bound = concentration_bound(x.size(), x.dim(), c, k);
    rows.push_back(row);
  }
  return rows;
}

CliqueOptimum clique_optimal(std::size_t n) {
  if (n < 2) throw_parameter("clique optimum needs n >= 2");
  CliqueOptimum out{Layout(n, 1), 0.0};
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) out.layout(i - 1, 0) = (2.0 * static_cast<double>(i) - (nn + 1.0)) / nn;
  out.energy = (nn - 1.0) * (nn - 2.0) / 6.0;
  return out;
}

StructuralReport structural_report(const Layout& x, const DistanceMatrix& d, std::optional<ConcentrationSpec> concentration) {
  if (x.size() != d.size())
    throw_parameter("layout has " + std::to_string(x.size()) + " points but the metric has " + std::to_string(d.size()));
  if (x.size() < 2) throw_parameter("structural report needs at least two points");
  StructuralReport r;
  r.n = x.size();
  r.dim = x.dim();
  r.diameter = d.diameter();
  r.stress = stress(x, d);
  r.energy_lower_bound = energy_lower_bound(r.n, r.diameter, r.dim);
  r.layout_diameter = layout_diameter(x);
  r.diameter_bound = diameter_upper_bound(std::max(1.0, r.diameter));
  r.energy_ok = !r.energy_lower_bound || r.stress >= *r.energy_lower_bound;
  r.diameter_ok = r.layout_diameter <= r.diameter_bound;
  if (concentration) r.concentration = concentration_profile(x, r.diameter, concentration->c, concentration->k_max);
  return r;
}

std::string StructuralReport::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["n"] = n;
  j["dim"] = dim;
  j["diameter"] = diameter;
  j["stress"] = stress;
  j["normalized_stress"] = normalized_stress(stress, n);
  j["energy_lower_bound"] = energy_lower_bound ? nlohmann::ordered_json(*energy_lower_bound) : nlohmann::ordered_json();
  j["diameter_bound"] = diameter_bound;
  j["layout_diameter"] = layout_diameter;
  j["diameter_ratio"] = diameter_ratio();
  j["bound_satisfied"] = {{"energy", energy_ok}, {"diameter", diameter_ok}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : concentration)
    rows.push_back({{"C", row.c}, {"k", row.k}, {"threshold", row.threshold}, {"observed", row.observed}, {"bound", row.bound}});
  j["concentration"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace kkmds
