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

#include <algorithm>
#include <array>
#include <set>

#include "kkmds/error.hpp"
#include "kkmds/graph.hpp"
#include "kkmds/random.hpp"

namespace kkmds {

namespace {

constexpr int kWattsStrogatzTries = 100;

// Ring lattice with single-endpoint clockwise rewiring. Rewiring rejects
// self-loops and duplicate edges, so the edge count stays n*k/2.
Graph watts_strogatz_once(std::size_t n, std::size_t k, double beta, Rng& rng) {
  std::vector<std::set<Vertex>> adj(n);
  auto add = [&](Vertex a, Vertex b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::size_t j = 1; j <= k / 2; ++j)
    for (std::size_t u = 0; u < n; ++u) add(static_cast<Vertex>(u), static_cast<Vertex>((u + j) % n));

  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t ui = 0; ui < n; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      const auto v = static_cast<Vertex>((ui + j) % n);
      if (rng.uniform() >= beta) continue;
      if (adj[u].size() >= n - 1) continue;
      Vertex w;
      do {
        w = static_cast<Vertex>(rng.below(n));
      } while (w == u || adj[u].count(w));
      if (!adj[u].count(v)) continue;
      adj[u].erase(v);
      adj[v].erase(u);
      add(u, w);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (static_cast<Vertex>(u) < v) edges.emplace_back(static_cast<Vertex>(u), v);
  return Graph(n, std::move(edges));
}

}  // namespace

Graph gen_watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  if (k % 2 != 0) throw_parameter("watts-strogatz degree k must be even");
  if (k < 2) throw_parameter("watts-strogatz degree k must be at least 2");
  if (k >= n) throw_parameter("watts-strogatz degree k must be smaller than n");
  if (!(beta >= 0.0 && beta <= 1.0)) throw_parameter("watts-strogatz beta must lie in [0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kWattsStrogatzTries; ++attempt) {
    Graph g = watts_strogatz_once(n, k, beta, rng);
    if (is_connected(g)) return g;
  }
  throw_resource("watts-strogatz: " + std::to_string(kWattsStrogatzTries) + " consecutive disconnected draws");
}

Graph gen_sbm(std::span<const std::size_t> sizes, const std::vector<std::vector<double>>& probs,
              std::uint64_t seed) {
  const std::size_t blocks = sizes.size();
  if (blocks == 0) throw_parameter("sbm needs at least one community");
  if (probs.size() != blocks) throw_parameter("sbm probability matrix must be blocks x blocks");
  for (std::size_t a = 0; a < blocks; ++a) {
    if (probs[a].size() != blocks) throw_parameter("sbm probability matrix must be blocks x blocks");
    for (std::size_t b = 0; b < blocks; ++b) {
      const double p = probs[a][b];
      if (!(p >= 0.0 && p <= 1.0)) throw_parameter("sbm probabilities must lie in [0, 1]");
      if (p != probs[b][a]) throw_parameter("sbm probability matrix must be symmetric");
    }
  }
  std::vector<int> labels;
  for (std::size_t a = 0; a < blocks; ++a) {
    if (sizes[a] == 0) throw_parameter("sbm community sizes must be positive");
    labels.insert(labels.end(), sizes[a], static_cast<int>(a));
  }
  const std::size_t n = labels.size();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < probs[labels[i]][labels[j]])
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  Graph g(n, std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

Graph gen_clique_path(std::size_t cliques, std::size_t clique_size) {
  if (cliques < 1 || clique_size < 1) throw_parameter("clique-path needs at least one clique of size >= 1");
  const std::size_t n = cliques * clique_size;
  std::vector<Edge> edges;
  std::vector<int> labels(n);
  for (std::size_t a = 0; a < cliques; ++a) {
    const std::size_t base = a * clique_size;
    for (std::size_t i = 0; i < clique_size; ++i) {
      labels[base + i] = static_cast<int>(a);
      for (std::size_t j = i + 1; j < clique_size; ++j)
        edges.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + j));
      if (a + 1 < cliques)
        for (std::size_t j = 0; j < clique_size; ++j)
          edges.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + clique_size + j));
    }
  }
  Graph g(n, std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

Graph gen_complete(std::size_t n) {
  if (n < 1) throw_parameter("complete graph needs n >= 1");
  return gen_clique_path(1, n);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw_parameter("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
  if (n < 1) throw_parameter("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, std::move(edges));
}

Graph davis_southern_women() {
  // Event attendance per woman, events numbered 1..14.
  static const std::array<std::vector<int>, 18> kAttendance = {{
      {1, 2, 3, 4, 5, 6, 8, 9},          // Evelyn Jefferson
      {1, 2, 3, 5, 6, 7, 8},             // Laura Mandeville
      {2, 3, 4, 5, 6, 7, 8, 9},          // Theresa Anderson
      {1, 3, 4, 5, 6, 7, 8},             // Brenda Rogers
      {3, 4, 5, 7},                      // Charlotte McDowd
      {3, 5, 6, 8},                      // Frances Anderson
      {5, 6, 7, 8},                      // Eleanor Nye
      {6, 8, 9},                         // Pearl Oglethorpe
      {5, 7, 8, 9},                      // Ruth DeSand
      {7, 8, 9, 12},                     // Verne Sanderson
      {8, 9, 10, 12},                    // Myra Liddel
      {8, 9, 10, 12, 13, 14},            // Katherina Rogers
      {7, 8, 9, 10, 12, 13, 14},         // Sylvia Avondale
      {6, 7, 9, 10, 11, 12, 13, 14},     // Nora Fayette
      {7, 8, 10, 11, 12},                // Helen Lloyd
      {8, 9},                            // Dorothy Murchison
      {9, 11},                           // Olivia Carleton
      {9, 11},                           // Flora Price
  }};
  std::vector<Edge> edges;
  for (std::size_t w = 0; w < kAttendance.size(); ++w)
    for (int e : kAttendance[w]) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(17 + e));
  Graph g(32, std::move(edges));
  std::vector<int> labels(32, 0);
  std::fill(labels.begin() + 18, labels.end(), 1);
  g.set_labels(std::move(labels));
  return g;
}

std::vector<std::vector<double>> sbm_reference_probs() {
  return {{0.09, 0.03, 0.02}, {0.03, 0.15, 0.04}, {0.02, 0.04, 0.10}};
}

}  // namespace kkmds
