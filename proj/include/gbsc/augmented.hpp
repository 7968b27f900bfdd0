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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbsc/graph.hpp"

namespace gbsc {

using Color = std::size_t;

/// k copies of every base vertex. Copy (v, i) lives at index v*k + i.
/// Conflict edges join (u, i) and (v, i) for every base edge uv; clonal
/// edges join all copies of one base vertex, so each base vertex spans a K_k.
class AugmentedGraph {
 public:
  AugmentedGraph(const Graph& base, std::size_t k) : base_(base), k_(k) {
    if (k == 0) throw std::invalid_argument("augmented graph needs k >= 1");
    const std::size_t n = base.num_vertices();
    GraphBuilder b(n * k);
    for (const auto& e : base.edges())
      for (Color i = 0; i < k; ++i) b.add_edge(copy(e.u, i), copy(e.v, i));
    for (Vertex v = 0; v < n; ++v)
      for (Color i = 0; i < k; ++i)
        for (Color j = i + 1; j < k; ++j) b.add_edge(copy(v, i), copy(v, j));
    graph_ = std::move(b).build();
  }

  const Graph& base() const { return base_; }
  const Graph& graph() const { return graph_; }
  std::size_t k() const { return k_; }

  Vertex copy(Vertex v, Color i) const { return v * k_ + i; }
  Vertex base_vertex(Vertex x) const { return x / k_; }
  Color color_of(Vertex x) const { return x % k_; }

 private:
  Graph base_;
  std::size_t k_;
  Graph graph_;
};

struct ProjectedVertex {
  Vertex vertex;
  Color color;
  bool operator==(const ProjectedVertex&) const = default;
};

/// Maps each copy in s to its (base vertex, color) pair, preserving order
/// and multiplicity.
inline std::vector<ProjectedVertex> project(const AugmentedGraph& a, std::span<const Vertex> s) {
  std::vector<ProjectedVertex> out;
  out.reserve(s.size());
  for (Vertex x : s) {
    if (x >= a.graph().num_vertices())
      throw std::out_of_range("augmented vertex " + std::to_string(x) + " out of range");
    out.push_back({a.base_vertex(x), a.color_of(x)});
  }
  return out;
}

}  // namespace gbsc
