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

#include <map>
#include <set>

#include "gbsc/augmented.hpp"
#include "gbsc/bitset.hpp"
#include "gbsc/dimacs.hpp"
#include "gbsc/gisp.hpp"
#include "gbsc/graph.hpp"
#include "oracles.hpp"

namespace gbsc {
namespace {

TEST(Bitset, SetCountFind) {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3u);
  EXPECT_EQ(b.find_first(), 0u);
  EXPECT_EQ(b.find_next(1), 64u);
  EXPECT_EQ(b.find_next(65), 129u);
  b.reset(129);
  EXPECT_EQ(b.find_next(65), 130u);
  Bitset c(130);
  c.set(64);
  EXPECT_EQ(b.count_and(c), 1u);
  b.subtract(c);
  EXPECT_EQ(b.count(), 1u);
}

TEST(Graph, RejectsBadEdges) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), std::invalid_argument);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(3, dup), std::invalid_argument);
  std::vector<Edge> far{{0, 3}};
  EXPECT_THROW(Graph(3, far), std::invalid_argument);
}

TEST(ErdosRenyi, ExtremeProbabilities) {
  EXPECT_EQ(erdos_renyi(5, 0.0, 7).num_edges(), 0u);
  EXPECT_EQ(erdos_renyi(5, 1.0, 7), complete_graph(5));
  EXPECT_THROW(erdos_renyi(5, 1.5, 7), std::invalid_argument);
}

TEST(ErdosRenyi, HalfDensityIsReproducible) {
  const Graph a = erdos_renyi(10, 0.5, 12345);
  const Graph b = erdos_renyi(10, 0.5, 12345);
  EXPECT_EQ(a, b);
  EXPECT_GE(a.num_edges(), 5u);
  EXPECT_LE(a.num_edges(), 40u);
  EXPECT_NE(a, erdos_renyi(10, 0.5, 12346));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)).num_edges(), 0u);
  const Graph p = complement(path_graph(3));
  EXPECT_EQ(p.num_edges(), 1u);
  EXPECT_TRUE(p.adjacent(0, 2));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = erdos_renyi(1 + s % 15, 0.4, s);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density(complete_graph(5)), 1.0);
  EXPECT_DOUBLE_EQ(density(Graph(4)), 0.0);
  EXPECT_DOUBLE_EQ(density(path_graph(3)), 2.0 / 3.0);
  EXPECT_THROW(density(Graph(1)), std::invalid_argument);
}

TEST(InducedSubgraph, Examples) {
  const std::vector<Vertex> three{0, 1, 2};
  EXPECT_EQ(induced_subgraph(complete_graph(4), three).graph, complete_graph(3));
  const Graph c5 = cycle_graph(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(c5, all).graph, c5);
  const auto sub = induced_subgraph(c5, three);
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.labels, three);
  const std::vector<Vertex> dup{1, 1};
  EXPECT_THROW(induced_subgraph(c5, dup), std::invalid_argument);
}

TEST(Augment, SingleCopyIsIsomorphic) {
  const Graph g = petersen_graph();
  const AugmentedGraph a(g, 1);
  EXPECT_EQ(a.graph(), g);
  EXPECT_THROW(AugmentedGraph(g, 0), std::invalid_argument);
}

TEST(Augment, EdgeCounts) {
  const AugmentedGraph p(path_graph(3), 2);
  EXPECT_EQ(p.graph().num_vertices(), 6u);
  EXPECT_EQ(p.graph().num_edges(), 7u);
  EXPECT_EQ(complement(p.graph()).num_edges(), 8u);
  const AugmentedGraph k(complete_graph(3), 3);
  EXPECT_EQ(k.graph().num_vertices(), 9u);
  EXPECT_EQ(complement(k.graph()).num_edges(), 18u);
}

TEST(Augment, CountsOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = erdos_renyi(3 + s % 8, 0.5, s);
    const std::size_t n = g.num_vertices(), m = g.num_edges(), k = 1 + s % 4;
    const AugmentedGraph a(g, k);
    EXPECT_EQ(a.graph().num_edges(), k * m + n * k * (k - 1) / 2);
    EXPECT_EQ(complement(a.graph()).num_edges(), n * k * k * (n - 1) / 2 - k * m);
    for (Vertex x = 0; x < a.graph().num_vertices(); ++x) EXPECT_EQ(a.copy(a.base_vertex(x), a.color_of(x)), x);
  }
}

TEST(Project, Examples) {
  const AugmentedGraph a(path_graph(3), 2);
  EXPECT_TRUE(project(a, std::vector<Vertex>{}).empty());
  const std::vector<Vertex> clones{a.copy(1, 0), a.copy(1, 1)};
  const auto pv = project(a, clones);
  ASSERT_EQ(pv.size(), 2u);
  EXPECT_EQ(pv[0], (ProjectedVertex{1, 0}));
  EXPECT_EQ(pv[1], (ProjectedVertex{1, 1}));
  const std::vector<Vertex> bad{6};
  EXPECT_THROW(project(a, bad), std::out_of_range);
}

TEST(Project, InjectiveOnIndependentSets) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = erdos_renyi(6, 0.5, s);
    const AugmentedGraph a(g, 3);
    const Graph& ag = a.graph();
    // Greedy maximal independent set from a seed-dependent start.
    std::vector<Vertex> is;
    for (std::size_t t = 0; t < ag.num_vertices(); ++t) {
      const Vertex x = (t + s) % ag.num_vertices();
      bool ok = true;
      for (Vertex y : is) ok = ok && !ag.adjacent(x, y);
      if (ok) is.push_back(x);
    }
    std::set<Vertex> bases;
    for (const auto& p : project(a, is)) bases.insert(p.vertex);
    EXPECT_EQ(bases.size(), is.size());
  }
}

TEST(Gisp, EdgeRules) {
  GroupIntervalInstance inst;
  inst.intervals = {{0, 2, 0}, {3, 5, 1}};
  EXPECT_EQ(group_interval_graph(inst).num_edges(), 0u);
  inst.intervals = {{0, 2, 0}, {3, 5, 0}};
  EXPECT_EQ(group_interval_graph(inst).num_edges(), 1u);
  inst.intervals = {{0, 2, 0}, {1, 3, 1}};
  EXPECT_EQ(group_interval_graph(inst).num_edges(), 1u);
  inst.intervals = {{0, 2, 0}, {2, 3, 1}};
  EXPECT_EQ(group_interval_graph(inst).num_edges(), 0u);
}

TEST(Gisp, GeneratorRespectsGroupsAndSeeds) {
  const auto inst = random_group_interval_instance(8, 4, 48, 12, 3);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& iv : inst.intervals) ++sizes[iv.group];
  for (const auto& [_, c] : sizes) EXPECT_LE(c, 4u);
  EXPECT_EQ(group_interval_graph(random_group_interval_instance(1, 4, 48, 12, 3)).num_vertices(), 1u);
  EXPECT_EQ(random_group_interval_instance(20, 4, 48, 12, 99), random_group_interval_instance(20, 4, 48, 12, 99));
}

TEST(Gisp, TextRoundTrip) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto inst = random_group_interval_instance(5 + s, 4, 48, 12, s);
    EXPECT_EQ(read_gisp(write_gisp(inst)), inst);
  }
}

TEST(Dimacs, RoundTripAndErrors) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = erdos_renyi(1 + s % 20, 0.3, s);
    EXPECT_EQ(read_dimacs(write_dimacs(g)), g);
  }
  EXPECT_EQ(read_dimacs("p edge 3 2\ne 1 2\ne 2 3\n"), path_graph(3));
  EXPECT_EQ(read_dimacs("c comment\np col 3 2\ne 1 2\ne 2 3\n"), path_graph(3));
  EXPECT_THROW(read_dimacs("p edge 2 1\ne 0 1\n"), std::invalid_argument);
  EXPECT_THROW(read_dimacs("p edge 2 1\ne 1 3\n"), std::invalid_argument);
  EXPECT_THROW(read_dimacs("p edge 2 2\ne 1 2\n"), std::invalid_argument);
  EXPECT_THROW(read_dimacs("p edge 2 1\ne 1 1\n"), std::invalid_argument);
  EXPECT_THROW(read_dimacs("e 1 2\n"), std::invalid_argument);
}

TEST(Generators, KnownGraphs) {
  const Graph p = petersen_graph();
  EXPECT_EQ(p.num_vertices(), 10u);
  EXPECT_EQ(p.num_edges(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  EXPECT_EQ(oracle::max_clique_size(p), 2u);
  EXPECT_EQ(complete_bipartite(4, 4).num_edges(), 16u);
  EXPECT_EQ(cycle_graph(6).num_edges(), 6u);
}

}  // namespace
}  // namespace gbsc
