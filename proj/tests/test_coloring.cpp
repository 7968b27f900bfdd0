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

#include <gtest/gtest.h>

#include "gbsc/coloring.hpp"
#include "oracles.hpp"

namespace gbsc {
namespace {

Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v)
      if (uniform_unit(rng) < p) gb.add_edge(u, v);
  return std::move(gb).build();
}

Graph wheel(std::size_t rim) {
  GraphBuilder b(rim + 1);
  for (Vertex v = 0; v < rim; ++v) {
    b.add_edge(v, (v + 1) % rim);
    b.add_edge(v, rim);
  }
  return std::move(b).build();
}

TEST(Validity, Examples) {
  const Graph k2 = complete_graph(2);
  EXPECT_FALSE(is_valid(k2, Coloring(std::vector<std::size_t>{0, 0})));
  EXPECT_TRUE(is_valid(k2, Coloring(std::vector<std::size_t>{0, 1})));
  const Graph g = erdos_renyi(10, 0.7, 1);
  std::vector<std::size_t> distinct(10);
  std::iota(distinct.begin(), distinct.end(), 0);
  EXPECT_TRUE(is_valid(g, Coloring(distinct)));
  // Partial colorings only constrain colored pairs.
  Coloring partial(2);
  partial.colors[0] = 0;
  EXPECT_TRUE(is_valid(k2, partial));
  EXPECT_FALSE(partial.total());
}

TEST(Excess, Examples) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(excess_colors(k3, Coloring(std::vector<std::size_t>{0, 1, 2}), 3), 0);
  EXPECT_EQ(excess_colors(k3, Coloring(std::vector<std::size_t>{0, 3, 2}), 3), 0);
  EXPECT_EQ(excess_colors(cycle_graph(5), dsatur(cycle_graph(5)), 3), 0);
  EXPECT_EQ(excess_colors(Graph(3), Coloring(std::vector<std::size_t>{0, 1, 2}), 1), 2);
  EXPECT_THROW(excess_colors(k3, Coloring(std::vector<std::size_t>{0, 0, 1}), 3), std::invalid_argument);
  EXPECT_THROW(excess_colors(k3, Coloring(3), 3), std::invalid_argument);
}

TEST(Dsatur, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(dsatur(complete_graph(n)).palette_size(), n);
  EXPECT_EQ(dsatur(cycle_graph(5)).palette_size(), 3u);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_bipartite(3 + s % 6, 4 + s % 5, 0.5, s);
    if (g.num_edges() == 0) continue;
    const Coloring c = dsatur(g);
    EXPECT_TRUE(is_valid(g, c));
    EXPECT_EQ(c.palette_size(), 2u) << s;
  }
}

TEST(Rlf, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(rlf(complete_graph(n)).palette_size(), n);
  EXPECT_EQ(rlf(Graph(6)).palette_size(), 1u);
  EXPECT_EQ(rlf(cycle_graph(6)).palette_size(), 2u);
}

TEST(Sli, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(sli(complete_graph(n)).palette_size(), n);
  for (std::size_t n = 4; n <= 12; n += 2) EXPECT_EQ(sli(cycle_graph(n)).palette_size(), 2u);
  const Graph w5 = wheel(5);
  const Coloring c = sli(w5);
  EXPECT_TRUE(is_valid(w5, c));
  EXPECT_EQ(c.palette_size(), 4u);
  EXPECT_EQ(oracle::chromatic_number(w5), 4u);
}

TEST(SmallestLast, PeelIsPermutation) {
  const Graph g = erdos_renyi(25, 0.3, 2);
  VertexList p = smallest_last_peel(g);
  std::sort(p.begin(), p.end());
  for (Vertex v = 0; v < 25; ++v) EXPECT_EQ(p[v], v);
}

TEST(Heuristics, ValidAndBoundedOnRandomGraphs) {
  std::size_t interchanges = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 1 + s % 30;
    const Graph g = erdos_renyi(n, static_cast<double>(s % 11) / 10.0, s);
    const std::size_t bound = g.max_degree() + 1;
    SliStats stats;
    for (const Coloring& c : {dsatur(g), rlf(g), sli(g, &stats)}) {
      ASSERT_EQ(c.size(), n);
      EXPECT_TRUE(c.total());
      EXPECT_TRUE(is_valid(g, c));
      EXPECT_LE(c.palette_size(), bound);
      // Colors are contiguous from 0.
      for (std::size_t v = 0; v < n; ++v) EXPECT_LT(c[v], c.palette_size());
    }
    interchanges += stats.interchanges;
    if (n <= 10) {
      const std::size_t chi = oracle::chromatic_number(g);
      EXPECT_GE(dsatur(g).palette_size(), chi);
    }
  }
  EXPECT_GT(interchanges, 0u);
}

TEST(Heuristics, Deterministic) {
  const Graph g = erdos_renyi(30, 0.5, 9);
  EXPECT_EQ(dsatur(g), dsatur(g));
  EXPECT_EQ(rlf(g), rlf(g));
  EXPECT_EQ(sli(g), sli(g));
}

TEST(Greedy, FollowsOrder) {
  std::vector<Edge> e{{0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 5}, {3, 4}};
  const Graph g(6, e);
  const std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
  const Coloring c = greedy_color(g, order);
  EXPECT_TRUE(is_valid(g, c));
  EXPECT_EQ(c.colors, (std::vector<std::size_t>{0, 0, 1, 1, 2, 2}));
  EXPECT_EQ(smallest_free_color(g, Coloring(6), 0), 0u);
}

}  // namespace
}  // namespace gbsc
