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
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gbsc/graph.hpp"
#include "gbsc/random.hpp"

namespace gbsc {

/// True iff every pair in s is adjacent; sets of size <= 1 are cliques.
inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Drops a minimum-degree vertex of the induced subgraph (ties uniform at
/// random) until what is left is a clique. Returns a sorted subset of s.
inline VertexList shrink(const Graph& g, std::span<const Vertex> s, std::uint64_t seed) {
  Rng rng(seed);
  VertexList current(s.begin(), s.end());
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  Bitset in(g.num_vertices());
  for (Vertex v : current) in.set(v);
  VertexList ties;
  while (current.size() > 1) {
    std::size_t min_deg = current.size();
    ties.clear();
    for (Vertex v : current) {
      const std::size_t d = g.row(v).count_and(in);
      if (d < min_deg) {
        min_deg = d;
        ties.clear();
      }
      if (d == min_deg) ties.push_back(v);
    }
    if (min_deg + 1 == current.size()) break;
    const Vertex drop = ties[uniform_index(rng, ties.size())];
    in.reset(drop);
    current.erase(std::find(current.begin(), current.end(), drop));
  }
  return current;
}

struct SearchOptions {
  std::size_t iterations = 0;
  /// Plateau moves allowed without an intervening growth step; defaults to
  /// the current clique size.
  std::optional<std::size_t> stall_limit;
};

/// Local search from a clique: a growth phase adds random vertices adjacent
/// to the whole clique, then a plateau move swaps in a random outside vertex
/// that misses exactly one member. Stops after `iterations` rounds or when
/// no move exists or the stall limit is hit. The result is maximal and never
/// smaller than `start`.
inline VertexList search(const Graph& g, std::span<const Vertex> start, const SearchOptions& opts,
                         std::uint64_t seed) {
  if (!is_clique(g, start)) throw std::invalid_argument("search must start from a clique");
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  VertexList clique(start.begin(), start.end());
  std::sort(clique.begin(), clique.end());
  clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
  Bitset in(n);
  for (Vertex v : clique) in.set(v);

  VertexList candidates;
  std::size_t stall = 0;
  auto collect = [&](std::size_t misses) {
    candidates.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!in.test(v) && g.row(v).count_and(in) + misses == clique.size()) candidates.push_back(v);
  };
  auto grow = [&] {
    while (true) {
      collect(0);
      if (candidates.empty()) return;
      const Vertex v = candidates[uniform_index(rng, candidates.size())];
      in.set(v);
      clique.push_back(v);
      stall = 0;
    }
  };

  for (std::size_t it = 0; it < opts.iterations; ++it) {
    grow();
    if (clique.empty()) break;
    collect(1);
    if (candidates.empty()) break;
    if (stall >= opts.stall_limit.value_or(clique.size())) break;
    const Vertex enter = candidates[uniform_index(rng, candidates.size())];
    auto leave = std::find_if(clique.begin(), clique.end(), [&](Vertex w) { return !g.adjacent(enter, w); });
    in.reset(*leave);
    *leave = enter;
    in.set(enter);
    ++stall;
  }
  grow();
  std::sort(clique.begin(), clique.end());
  return clique;
}

inline VertexList search(const Graph& g, std::span<const Vertex> start, std::size_t iterations, std::uint64_t seed) {
  return search(g, start, SearchOptions{iterations, std::nullopt}, seed);
}

}  // namespace gbsc
