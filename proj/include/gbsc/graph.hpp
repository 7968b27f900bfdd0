// Copyright 2026 The GBSC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/bitset.hpp"
#include "gbsc/random.hpp"

namespace gbsc {

using Vertex = std::size_t;
using VertexList = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable undirected simple graph on vertices 0..n-1, stored as dense
/// adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  /// Throws std::invalid_argument on self-loops, duplicate edges and
  /// out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ")");
      if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
      if (rows_[e.u].test(e.v))
        throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      link(e.u, e.v);
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const { return rows_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return rows_.empty(); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
  }

  VertexList neighbors(Vertex v) const {
    VertexList out;
    rows_[v].for_each([&](std::size_t u) { out.push_back(u); });
    return out;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (u < v) out.push_back({u, v});
      });
    return out;
  }

  bool operator==(const Graph& o) const = default;

 private:
  friend class GraphBuilder;
  void link(Vertex u, Vertex v) {
    rows_[u].set(v);
    rows_[v].set(u);
    ++num_edges_;
  }

  std::vector<Bitset> rows_;
  std::size_t num_edges_ = 0;
};

/// Incremental construction for generators that produce edges known to be
/// simple; add_edge ignores repeats.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  void add_edge(Vertex u, Vertex v) {
    if (u == v || g_.adjacent(u, v)) return;
    g_.link(u, v);
  }
  std::size_t num_vertices() const { return g_.num_vertices(); }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

inline Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// 2m / (n(n-1)); requires n >= 2.
inline double density(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) throw std::invalid_argument("density is undefined for graphs with fewer than 2 vertices");
  return 2.0 * static_cast<double>(g.num_edges()) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

/// Subgraph on `labels`, relabeled 0..|labels|-1 in the order given.
struct InducedSubgraph {
  Graph graph;
  VertexList labels;  // local id -> id in the parent graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.num_vertices();
  Bitset seen(n);
  for (Vertex v : s) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (seen.test(v)) throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in subset");
    seen.set(v);
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
  return {std::move(b).build(), VertexList(s.begin(), s.end())};
}

/// Number of edges of g with both ends in s.
inline std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> s) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) m += g.adjacent(s[i], s[j]) ? 1 : 0;
  return m;
}

/// Density of g[s]; 0 when |s| <= 1.
inline double induced_density(const Graph& g, std::span<const Vertex> s) {
  if (s.size() <= 1) return 0.0;
  const double k = static_cast<double>(s.size());
  return 2.0 * static_cast<double>(induced_edge_count(g, s)) / (k * (k - 1.0));
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; n >= 3 && v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) gb.add_edge(u, a + v);
  return std::move(gb).build();
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, 5 + i);
  }
  return std::move(b).build();
}

/// G(n, p): every pair is an edge independently with probability p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace gbsc
