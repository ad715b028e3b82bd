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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kkmds/graph.hpp"
#include "kkmds/kk_scheme.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

struct GdParams {
  double lr = 0.005;
  std::size_t steps = 4000;
  std::uint64_t seed = 0;
  // Random starts are standard normal scaled by 0.1 * init_radius.
  double init_radius = 2.5;
  std::optional<Layout> init;  // start here instead of a random draw
  std::size_t trace_every = 100;
};

struct GdResult {
  Layout layout;  // best iterate seen
  double stress = 0.0;
  std::size_t best_step = 0;
  double final_stress = 0.0;  // last iterate
  std::vector<std::pair<std::size_t, double>> trace;
};

// Full-batch gradient descent x <- x - lr * grad E(x) with best-iterate
// tracking. Throws if an iterate becomes non-finite.
GdResult gradient_descent(const DistanceMatrix& d, std::size_t dim, const GdParams& p);

// step,stress
std::string trace_to_csv(const std::vector<std::pair<std::size_t, double>>& trace);

// Eigenvalues of the combinatorial (L = D - A) or symmetric degree-normalised
// (I - D^-1/2 A D^-1/2) Laplacian, ascending.
std::vector<double> laplacian_spectrum(const Graph& g, bool normalized);

// Coordinates from the eigenvectors of the `dim` smallest nontrivial
// Laplacian eigenvalues. The normalised variant maps the symmetric
// eigenvectors through D^-1/2. Each eigenvector's first nonzero entry is made
// positive.
Layout spectral_embed(const Graph& g, std::size_t dim, bool normalized);

// Scalar alpha minimising stress(alpha * x); stress is quadratic in alpha.
double stress_optimal_scale(const Layout& x, const DistanceMatrix& d);
Layout scaled_layout(const Layout& x, double factor);

struct CombinedResult {
  SchemeResult scheme;
  GdResult refined;
};

// kk_scheme followed by gradient descent started from its output.
CombinedResult greedy_then_grad(const DistanceMatrix& d, const SchemeParams& scheme, const GdParams& gd);

// Restart drivers over seeds seed, seed + 1, ...; best by stress.
RestartResult gradient_restarts(const DistanceMatrix& d, std::size_t dim, const GdParams& gd, std::size_t trials);
RestartResult greedy_grad_restarts(const DistanceMatrix& d, const SchemeParams& scheme, const GdParams& gd);

}  // namespace kkmds
