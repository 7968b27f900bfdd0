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
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/graph.hpp"

namespace gbsc {

inline constexpr std::size_t kUncolored = std::numeric_limits<std::size_t>::max();

/// Vertex -> color index map. Entries equal to kUncolored are outside the
/// covered subset.
struct Coloring {
  std::vector<std::size_t> colors;

  Coloring() = default;
  explicit Coloring(std::size_t n) : colors(n, kUncolored) {}
  explicit Coloring(std::vector<std::size_t> c) : colors(std::move(c)) {}

  std::size_t size() const { return colors.size(); }
  std::size_t operator[](Vertex v) const { return colors[v]; }
  bool colored(Vertex v) const { return colors[v] != kUncolored; }
  bool total() const {
    return std::none_of(colors.begin(), colors.end(), [](std::size_t c) { return c == kUncolored; });
  }

  /// Number of distinct colors in use.
  std::size_t palette_size() const {
    std::set<std::size_t> seen;
    for (auto c : colors)
      if (c != kUncolored) seen.insert(c);
    return seen.size();
  }

  bool operator==(const Coloring&) const = default;
};

/// No edge with both ends covered shares a color.
inline bool is_valid(const Graph& g, const Coloring& col) {
  if (col.size() != g.num_vertices()) return false;
  for (const auto& e : g.edges())
    if (col.colored(e.u) && col[e.u] == col[e.v]) return false;
  return true;
}

/// Palette size minus chi. Requires a valid total coloring.
inline long excess_colors(const Graph& g, const Coloring& col, std::size_t chi) {
  if (chi < 1) throw std::invalid_argument("chromatic number must be >= 1");
  if (!col.total() || !is_valid(g, col)) throw std::invalid_argument("excess needs a valid total coloring");
  return static_cast<long>(col.palette_size()) - static_cast<long>(chi);
}

/// Smallest color not used by an already-colored neighbor.
inline std::size_t smallest_free_color(const Graph& g, const Coloring& col, Vertex v) {
  std::vector<bool> used;
  g.row(v).for_each([&](std::size_t u) {
    if (col.colored(u)) {
      if (col[u] >= used.size()) used.resize(col[u] + 1, false);
      used[col[u]] = true;
    }
  });
  std::size_t c = 0;
  while (c < used.size() && used[c]) ++c;
  return c;
}

inline Coloring greedy_color(const Graph& g, std::span<const Vertex> order) {
  Coloring col(g.num_vertices());
  for (Vertex v : order) col.colors[v] = smallest_free_color(g, col, v);
  return col;
}

/// Dsatur: color next the vertex with most distinct neighbor colors, ties by
/// degree among uncolored vertices, then lowest id; use the smallest
/// feasible color.
inline Coloring dsatur(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Coloring col(n);
  std::vector<std::vector<std::uint32_t>> neighbor_colors(n);
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> uncolored_degree(n);
  for (Vertex v = 0; v < n; ++v) uncolored_degree[v] = g.degree(v);

  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (col.colored(v)) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && uncolored_degree[v] > uncolored_degree[pick]))
        pick = v;
    }
    auto& counts = neighbor_colors[pick];
    std::size_t c = 0;
    while (c < counts.size() && counts[c] > 0) ++c;
    col.colors[pick] = c;
    g.row(pick).for_each([&](std::size_t u) {
      auto& cu = neighbor_colors[u];
      if (cu.size() <= c) cu.resize(c + 1, 0);
      if (cu[c]++ == 0) ++saturation[u];
      --uncolored_degree[u];
    });
  }
  return col;
}

/// Recursive Largest First: build one color class at a time.
inline Coloring rlf(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Coloring col(n);
  Bitset uncolored(n);
  for (Vertex v = 0; v < n; ++v) uncolored.set(v);
  std::size_t color = 0;
  while (!uncolored.none()) {
    Vertex first = n;
    std::size_t best_deg = 0;
    uncolored.for_each([&](std::size_t v) {
      const std::size_t d = g.row(v).count_and(uncolored);
      if (first == n || d > best_deg) {
        first = v;
        best_deg = d;
      }
    });
    // open: uncolored, not in the class, not adjacent to it.
    // blocked: uncolored and adjacent to the class.
    Bitset open = uncolored;
    open.reset(first);
    open.subtract(g.row(first));
    Bitset blocked = uncolored;
    blocked &= g.row(first);
    Bitset remaining = uncolored;  // uncolored minus the class
    remaining.reset(first);
    col.colors[first] = color;

    while (!open.none()) {
      Vertex pick = n;
      std::size_t pick_blocked = 0;
      std::size_t pick_deg = 0;
      open.for_each([&](std::size_t x) {
        const std::size_t b = g.row(x).count_and(blocked);
        const std::size_t d = g.row(x).count_and(remaining);
        if (pick == n || b > pick_blocked || (b == pick_blocked && d < pick_deg)) {
          pick = x;
          pick_blocked = b;
          pick_deg = d;
        }
      });
      col.colors[pick] = color;
      remaining.reset(pick);
      open.reset(pick);
      Bitset newly = open;
      newly &= g.row(pick);
      open.subtract(newly);
      blocked |= newly;
    }
    for (Vertex v = 0; v < n; ++v)
      if (col[v] == color) uncolored.reset(v);
    ++color;
  }
  return col;
}

/// Order in which vertices are peeled by repeatedly removing a
/// minimum-degree vertex (lowest id on ties).
inline VertexList smallest_last_peel(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  VertexList peel;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    removed[pick] = true;
    peel.push_back(pick);
    g.row(pick).for_each([&](std::size_t u) {
      if (!removed[u]) --deg[u];
    });
  }
  return peel;
}

struct SliStats {
  std::size_t interchanges = 0;
};

/// Smallest Last with Interchange. Vertices are colored greedily in reverse
/// peel order. When a vertex sees every color 0..k-1, pairs (i, j), i < j,
/// are scanned lexicographically for a two-colored subgraph in which no
/// component touches the vertex through both colors; components holding an
/// i-colored neighbor swap i and j and the vertex takes color i.
inline Coloring sli(const Graph& g, SliStats* stats = nullptr) {
  const std::size_t n = g.num_vertices();
  VertexList order = smallest_last_peel(g);
  std::reverse(order.begin(), order.end());
  Coloring col(n);
  std::size_t k = 0;
  std::vector<std::size_t> component(n);

  auto try_interchange = [&](Vertex v) -> bool {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        std::fill(component.begin(), component.end(), kUncolored);
        std::size_t next_id = 0;
        VertexList stack;
        for (Vertex s = 0; s < n; ++s) {
          if (!col.colored(s) || (col[s] != i && col[s] != j) || component[s] != kUncolored) continue;
          component[s] = next_id;
          stack.push_back(s);
          while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            g.row(x).for_each([&](std::size_t y) {
              if (col.colored(y) && (col[y] == i || col[y] == j) && component[y] == kUncolored) {
                component[y] = next_id;
                stack.push_back(y);
              }
            });
          }
          ++next_id;
        }
        std::vector<bool> touches_i(next_id, false);
        std::vector<bool> touches_j(next_id, false);
        g.row(v).for_each([&](std::size_t u) {
          if (!col.colored(u)) return;
          if (col[u] == i) touches_i[component[u]] = true;
          if (col[u] == j) touches_j[component[u]] = true;
        });
        bool clash = false;
        for (std::size_t c = 0; c < next_id && !clash; ++c) clash = touches_i[c] && touches_j[c];
        if (clash) continue;
        for (Vertex x = 0; x < n; ++x)
          if (component[x] != kUncolored && touches_i[component[x]]) col.colors[x] = col[x] == i ? j : i;
        if (!is_valid(g, col)) throw std::logic_error("sli interchange produced an invalid partial coloring");
        if (stats) ++stats->interchanges;
        col.colors[v] = i;
        return true;
      }
    return false;
  };

  for (Vertex v : order) {
    const std::size_t c = smallest_free_color(g, col, v);
    if (c < k) {
      col.colors[v] = c;
      continue;
    }
    if (k >= 2 && try_interchange(v)) continue;
    col.colors[v] = k++;
  }
  return col;
}

}  // namespace gbsc
