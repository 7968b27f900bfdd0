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
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/coloring.hpp"
#include "gbsc/gbs_math.hpp"
#include "gbsc/graph.hpp"

namespace gbsc {

struct ExactResult {
  std::size_t chi = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
  std::size_t lower_bound = 0;
  double seconds = 0.0;
};

inline constexpr std::chrono::seconds kDefaultExactTimeLimit{300};

namespace detail {

/// Largest clique among greedy max-degree extensions from every start vertex.
inline VertexList greedy_clique(const Graph& g) {
  const std::size_t n = g.num_vertices();
  VertexList best;
  for (Vertex start = 0; start < n; ++start) {
    VertexList clique{start};
    Bitset cand = g.row(start);
    while (!cand.none()) {
      Vertex pick = n;
      std::size_t pick_deg = 0;
      cand.for_each([&](std::size_t v) {
        const std::size_t d = g.row(v).count_and(cand);
        if (pick == n || d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      clique.push_back(pick);
      cand &= g.row(pick);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

class DsaturBranchAndBound {
 public:
  DsaturBranchAndBound(const Graph& g, std::chrono::duration<double> limit)
      : g_(g), n_(g.num_vertices()), deadline_(std::chrono::steady_clock::now() +
                                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(limit)) {}

  ExactResult solve() {
    const auto t0 = std::chrono::steady_clock::now();
    ExactResult r;
    if (n_ == 0) {
      r.witness = Coloring(0);
      return r;
    }
    best_ = dsatur(g_);
    upper_ = best_.palette_size();
    const VertexList clique = greedy_clique(g_);
    lower_ = std::max(clique.size(), hoffman_colors(g_));
    if (lower_ < upper_) {
      col_ = Coloring(n_);
      forbidden_.assign(n_, std::vector<std::uint32_t>(upper_, 0));
      saturation_.assign(n_, 0);
      std::size_t used = 0;
      for (Vertex v : clique) assign(v, used++);
      branch(clique.size(), used);
      for (Vertex v : clique) unassign(v);
    }
    r.chi = upper_;
    r.witness = best_;
    r.nodes_explored = nodes_;
    r.timed_out = timed_out_;
    r.lower_bound = timed_out_ ? lower_ : upper_;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  void assign(Vertex v, std::size_t c) {
    col_.colors[v] = c;
    g_.row(v).for_each([&](std::size_t u) {
      if (forbidden_[u][c]++ == 0) ++saturation_[u];
    });
  }
  void unassign(Vertex v) {
    const std::size_t c = col_[v];
    col_.colors[v] = kUncolored;
    g_.row(v).for_each([&](std::size_t u) {
      if (--forbidden_[u][c] == 0) --saturation_[u];
    });
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  void branch(std::size_t colored, std::size_t used) {
    ++nodes_;
    if (out_of_time() || upper_ == lower_) return;
    if (colored == n_) {
      upper_ = used;
      best_ = col_;
      return;
    }
    Vertex pick = n_;
    for (Vertex v = 0; v < n_; ++v) {
      if (col_.colored(v)) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick)))
        pick = v;
    }
    for (std::size_t c = 0; c < used; ++c) {
      if (forbidden_[pick][c] > 0) continue;
      assign(pick, c);
      branch(colored + 1, used);
      unassign(pick);
      if (timed_out_ || upper_ == lower_ || used >= upper_) return;
    }
    // A new color is only worth opening if it can still beat the incumbent.
    if (used + 1 < upper_) {
      assign(pick, used);
      branch(colored + 1, used + 1);
      unassign(pick);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_;
  Coloring best_;
  Coloring col_;
  std::size_t upper_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::vector<std::uint32_t>> forbidden_;
  std::vector<std::size_t> saturation_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

/// Chromatic number by DSATUR-ordered branch and bound. On timeout, chi is
/// the best palette found and timed_out is set.
inline ExactResult chromatic_exact(const Graph& g,
                                   std::chrono::duration<double> time_limit = kDefaultExactTimeLimit) {
  return detail::DsaturBranchAndBound(g, time_limit).solve();
}

inline constexpr std::size_t kMisCap = 20;
inline constexpr std::size_t kSetCoverCap = 12;

/// All maximal independent sets (Bron-Kerbosch with pivoting on the
/// complement), each sorted, in discovery order.
inline std::vector<VertexList> maximal_independent_sets(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMisCap) throw std::invalid_argument("MIS enumeration is limited to " + std::to_string(kMisCap) + " vertices");
  std::vector<std::uint32_t> non_adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) non_adj[u] |= std::uint32_t{1} << v;
  std::vector<VertexList> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  auto rec = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
    if (p == 0 && x == 0) {
      VertexList s;
      for (Vertex v = 0; v < n; ++v)
        if ((r >> v) & 1U) s.push_back(v);
      out.push_back(std::move(s));
      return;
    }
    std::uint32_t px = p | x;
    Vertex pivot = static_cast<Vertex>(std::countr_zero(px));
    int best = -1;
    for (std::uint32_t t = px; t; t &= t - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(t));
      const int c = std::popcount(p & non_adj[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (std::uint32_t t = p & ~non_adj[pivot]; t; t &= t - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(t));
      const std::uint32_t bit = std::uint32_t{1} << v;
      self(self, r | bit, p & non_adj[v], x & non_adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  rec(rec, 0, all, 0);
  return out;
}

/// Minimum number of maximal independent sets covering V, by iterative
/// deepening over cover sizes (each level branches on the sets that contain
/// the lowest uncovered vertex). If `witness` is given it receives a
/// coloring: each vertex takes the index of its first covering set.
inline std::size_t chromatic_set_cover_oracle(const Graph& g, Coloring* witness = nullptr) {
  const std::size_t n = g.num_vertices();
  if (n > kSetCoverCap)
    throw std::invalid_argument("set-cover oracle is limited to " + std::to_string(kSetCoverCap) + " vertices");
  if (n == 0) {
    if (witness) *witness = Coloring(0);
    return 0;
  }
  std::vector<std::uint32_t> sets;
  for (const auto& s : maximal_independent_sets(g)) {
    std::uint32_t m = 0;
    for (Vertex v : s) m |= std::uint32_t{1} << v;
    sets.push_back(m);
  }
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> chosen;
  auto cover = [&](auto&& self, std::uint32_t covered, std::size_t budget) -> bool {
    if (covered == all) return true;
    if (budget == 0) return false;
    const int v = std::countr_zero(~covered & all);
    for (std::uint32_t s : sets) {
      if (!((s >> v) & 1U)) continue;
      chosen.push_back(s);
      if (self(self, covered | s, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= n; ++size) {
    chosen.clear();
    if (cover(cover, 0, size)) {
      if (witness) {
        *witness = Coloring(n);
        for (Vertex v = 0; v < n; ++v)
          for (std::size_t i = 0; i < chosen.size(); ++i)
            if ((chosen[i] >> v) & 1U) {
              witness->colors[v] = i;
              break;
            }
      }
      return size;
    }
  }
  return n;
}

}  // namespace gbsc
