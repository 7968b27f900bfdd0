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

#include "gbsc/clique.hpp"
#include "oracles.hpp"

namespace gbsc {
namespace {

bool is_maximal_clique(const Graph& g, const VertexList& c) {
  if (!is_clique(g, c)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    bool all = true;
    for (Vertex u : c) all = all && g.adjacent(u, v);
    if (all) return false;
  }
  return true;
}

TEST(IsClique, Examples) {
  const Graph g = path_graph(3);
  EXPECT_TRUE(is_clique(g, std::vector<Vertex>{}));
  EXPECT_TRUE(is_clique(g, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_clique(g, std::vector<Vertex>{0, 2}));
}

TEST(Shrink, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(shrink(k4, std::vector<Vertex>{3, 1, 2}, 0), (VertexList{1, 2, 3}));
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(0, 3);
  const Graph tri = std::move(b).build();
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(shrink(tri, std::vector<Vertex>{0, 1, 2, 3}, s), (VertexList{0, 1, 2}));
  EXPECT_EQ(shrink(Graph(5), std::vector<Vertex>{0, 2, 4}, 1).size(), 1u);
  EXPECT_TRUE(shrink(k4, std::vector<Vertex>{}, 0).empty());
}

TEST(Shrink, AlwaysReturnsCliqueSubset) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = erdos_renyi(15, 0.6, s);
    VertexList sub;
    for (Vertex v = 0; v < 15; ++v)
      if ((s >> (v % 7)) & 1U || v % 3 == 0) sub.push_back(v);
    const VertexList c = shrink(g, sub, s);
    EXPECT_TRUE(is_clique(g, c));
    EXPECT_FALSE(c.empty());
    EXPECT_TRUE(std::includes(sub.begin(), sub.end(), c.begin(), c.end()));
  }
}

TEST(Search, Examples) {
  const Graph k5 = complete_graph(5);
  EXPECT_EQ(search(k5, std::vector<Vertex>{2}, 4, 0), (VertexList{0, 1, 2, 3, 4}));
  EXPECT_THROW(search(path_graph(3), std::vector<Vertex>{0, 2}, 4, 0), std::invalid_argument);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = erdos_renyi(14, 0.5, s);
    // A maximum clique cannot be improved on.
    std::size_t best = oracle::max_clique_size(g);
    VertexList start;
    for (Vertex v = 0; v < 14 && start.empty(); ++v) {
      const VertexList c = search(g, std::vector<Vertex>{v}, 200, s + v);
      if (c.size() == best) start = c;
    }
    if (!start.empty()) {
      EXPECT_EQ(search(g, start, 14, s).size(), best);
    }
  }
}

TEST(Search, ResultIsMaximalAndNoSmaller) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = erdos_renyi(18, 0.4 + 0.005 * static_cast<double>(s), s);
    const VertexList start = shrink(g, std::vector<Vertex>{0, 1, 2, 3, 4, 5}, s);
    const VertexList c = search(g, start, 18, s);
    EXPECT_TRUE(is_maximal_clique(g, c));
    EXPECT_GE(c.size(), start.size());
  }
}

TEST(Search, FindsMaximumCliqueUsually) {
  std::size_t hits = 0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = erdos_renyi(12, 0.5, 1000 + s);
    std::vector<Vertex> all(12);
    std::iota(all.begin(), all.end(), 0);
    const VertexList c = search(g, shrink(g, all, s), 12, s);
    if (c.size() == oracle::max_clique_size(g)) ++hits;
  }
  EXPECT_GE(hits, 24u);
}

TEST(Search, Deterministic) {
  const Graph g = erdos_renyi(20, 0.5, 77);
  EXPECT_EQ(search(g, std::vector<Vertex>{0}, 20, 5), search(g, std::vector<Vertex>{0}, 20, 5));
}

}  // namespace
}  // namespace gbsc
