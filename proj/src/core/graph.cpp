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

#include "kkmds/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "kkmds/error.hpp"
#include "text.hpp"

namespace kkmds {

using namespace text;


Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw_parameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw_parameter("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

void Graph::set_labels(std::vector<int> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw_parameter("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                    std::to_string(n_));
  }
  labels_ = std::move(labels);
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), d_(std::move(values)) {
  if (d_.size() != n * n) throw_parameter("distance matrix needs n*n entries");
  min_ = n >= 2 ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i * n + i] != 0.0) {
      throw_invariant("nonzero diagonal entry at (" + std::to_string(i) + ", " + std::to_string(i) + ")");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d_[i * n + j];
      const double b = d_[j * n + i];
      if (!std::isfinite(a) || a <= 0.0) {
        throw_invariant("distance (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") must be positive and finite");
      }
      if (a != b) {
        throw_invariant("distance matrix is not symmetric at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
      diameter_ = std::max(diameter_, a);
      min_ = std::min(min_, a);
    }
  }
}

bool DistanceMatrix::is_integral() const noexcept {
  return std::all_of(d_.begin(), d_.end(), [](double v) { return v == std::floor(v); });
}

std::optional<std::array<std::size_t, 3>> DistanceMatrix::find_triangle_violation(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k) + tol) return std::array{i, j, k};
  return std::nullopt;
}

DistanceMatrix DistanceMatrix::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw_parameter("scale factor must be positive");
  std::vector<double> v(d_);
  for (double& x : v) x *= factor;
  return DistanceMatrix(n_, std::move(v));
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::int64_t> fixed_n;
  std::vector<Edge> edges;
  std::int64_t max_index = -1;
  bool seen_content = false;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (is_blank_or_comment(lines[li])) continue;
    const auto tokens = split_ws(lines[li]);
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      fixed_n = parse_int(tokens[1], line_no);
      if (*fixed_n <= 0) throw_parse("vertex count must be positive at line " + std::to_string(line_no));
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw_parse("expected two vertex indices at line " + std::to_string(line_no));
    }
    const std::int64_t u = parse_int(tokens[0], line_no);
    const std::int64_t v = parse_int(tokens[1], line_no);
    if (u < 0 || v < 0) throw_parse("negative vertex index at line " + std::to_string(line_no));
    if (u == v) throw_parse("self-loop at line " + std::to_string(line_no));
    if (u > std::numeric_limits<Vertex>::max() || v > std::numeric_limits<Vertex>::max()) {
      throw_parse("vertex index too large at line " + std::to_string(line_no));
    }
    if (fixed_n && (u >= *fixed_n || v >= *fixed_n)) {
      throw_parse("vertex index out of range at line " + std::to_string(line_no));
    }
    max_index = std::max({max_index, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  const std::int64_t n = fixed_n ? *fixed_n : max_index + 1;
  if (n <= 0) throw_parse("edge list defines no vertices");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> parse_labels(std::string_view text) {
  std::vector<int> labels;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (is_blank_or_comment(lines[li])) continue;
    const auto tokens = split_ws(lines[li]);
    if (tokens.size() != 1) throw_parse("expected one label at line " + std::to_string(li + 1));
    labels.push_back(static_cast<int>(parse_int(tokens[0], li + 1)));
  }
  return labels;
}

std::string format_labels(std::span<const int> labels) {
  std::ostringstream out;
  for (int l : labels) out << l << '\n';
  return out.str();
}

DistanceMatrix parse_distance_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t n = 0;
  std::size_t rows = 0;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (is_blank_or_comment(lines[li])) continue;
    std::size_t count = 0;
    std::string_view line = lines[li];
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) cell.remove_prefix(1);
      while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.remove_suffix(1);
      values.push_back(parse_double(cell, li + 1));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) n = count;
    if (count != n) throw_parse("row at line " + std::to_string(li + 1) + " has " + std::to_string(count) +
                                " entries, expected " + std::to_string(n));
    ++rows;
  }
  if (rows == 0) throw_parse("distance matrix is empty");
  if (rows != n) throw_parse("distance matrix is not square");
  return DistanceMatrix(n, std::move(values));
}

std::string format_distance_csv(const DistanceMatrix& d) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j) out << ',';
      out << d(i, j);
    }
    out << '\n';
  }
  return out.str();
}

DistanceMatrix apsp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.adjacency();
  std::vector<double> d(n * n, 0.0);
  std::vector<int> dist(n);
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw_invariant("graph is disconnected: vertices " + std::to_string(s) + " and " + std::to_string(t) +
                        " lie in different components");
      }
      d[s * n + t] = dist[t];
    }
  }
  return DistanceMatrix(n, std::move(d));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace kkmds
