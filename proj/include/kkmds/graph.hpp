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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kkmds {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices [0, n). Edges are stored with the
// smaller endpoint first, sorted and deduplicated.
class Graph {
public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::vector<Vertex>> adjacency() const;

  // Optional per-vertex integer labels (community ids); empty when absent.
  const std::vector<int>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<int> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
};

// Dense symmetric matrix of pairwise distances with zero diagonal and
// positive finite off-diagonal entries.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {d_.data() + i * n_, n_}; }
  std::span<const double> values() const noexcept { return d_; }

  double diameter() const noexcept { return diameter_; }
  // Smallest off-diagonal entry; 0 when n < 2.
  double min_distance() const noexcept { return min_; }
  bool is_integral() const noexcept;

  // First (i, j, k) with d(i,k) > d(i,j) + d(j,k) beyond tol, if any. O(n^3).
  std::optional<std::array<std::size_t, 3>> find_triangle_violation(double tol = 1e-9) const;

  DistanceMatrix scaled(double factor) const;

private:
  std::size_t n_ = 0;
  std::vector<double> d_;
  double diameter_ = 0.0;
  double min_ = 0.0;
};

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// One integer label per line.
std::vector<int> parse_labels(std::string_view text);
std::string format_labels(std::span<const int> labels);

// Plain n x n CSV; the DistanceMatrix invariants are enforced.
DistanceMatrix parse_distance_csv(std::string_view text);
std::string format_distance_csv(const DistanceMatrix& d);

// Hop distances by BFS from every vertex. Throws on disconnected input.
DistanceMatrix apsp(const Graph& g);

bool is_connected(const Graph& g);

// Generators. All are pure functions of their arguments.
Graph gen_watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
Graph gen_sbm(std::span<const std::size_t> sizes, const std::vector<std::vector<double>>& probs,
              std::uint64_t seed);
Graph gen_clique_path(std::size_t cliques, std::size_t clique_size);
Graph gen_complete(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
// Davis Southern Women attendance graph: women 0..17, events 18..31.
Graph davis_southern_women();

// Connection probabilities of the three-community block model used in the
// community-detection experiment (sizes 35, 35, 50).
std::vector<std::vector<double>> sbm_reference_probs();

}  // namespace kkmds
