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

#include <cmath>

#include "gbsc/sampler.hpp"
#include "oracles.hpp"

namespace gbsc {
namespace {

TEST(PatternWeight, Examples) {
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(pattern_weight(k2, std::vector<Vertex>{}, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(pattern_weight(k2, std::vector<Vertex>{0, 1}, 0.5), 0.25);
  EXPECT_EQ(pattern_weight(Graph(2), std::vector<Vertex>{0, 1}, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(pattern_weight(complete_graph(4), std::vector<Vertex>{0, 1, 2, 3}, 1.0), 9.0);
}

TEST(PhotonPattern, RoundTrip) {
  const std::vector<Vertex> s{1, 4};
  const auto p = PhotonPattern::from_subset(6, s);
  EXPECT_EQ(p.subset(), VertexList(s.begin(), s.end()));
  EXPECT_THROW(PhotonPattern::from_subset(3, s), std::out_of_range);
}

TEST(Distribution, ConditionedExamples) {
  const auto k3 = condition_on_size(enumerate_distribution(complete_graph(3), 0.4), 2);
  ASSERT_EQ(k3.size(), 3u);
  for (const auto& [_, p] : k3) EXPECT_NEAR(p, 1.0 / 3.0, 1e-12);
  const auto star = condition_on_size(enumerate_distribution(complete_bipartite(1, 3), 0.4), 2);
  ASSERT_EQ(star.size(), 3u);
  for (const auto& [s, p] : star) {
    EXPECT_EQ(s[0], 0u);
    EXPECT_NEAR(p, 1.0 / 3.0, 1e-12);
  }
  const auto empty = enumerate_distribution(Graph(4), 0.5);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty.begin()->first.empty());
  EXPECT_EQ(empty.begin()->second, 1.0);
}

TEST(Distribution, ConditioningRemovesScaling) {
  const Graph g = erdos_renyi(9, 0.5, 4);
  const auto a = condition_on_size(enumerate_distribution(g, 0.1), 4);
  const auto b = condition_on_size(enumerate_distribution(g, 0.35), 4);
  EXPECT_LE(total_variation(a, b), 1e-12);
  EXPECT_LE(oracle::tv_distance(a, oracle::conditioned_distribution(g, 4)), 1e-12);
}

TEST(Sample, EnumerateFrequenciesOnTriangle) {
  SamplerConfig cfg;
  cfg.mode = SamplerMode::kEnumerate;
  cfg.mean_photons = 2;
  cfg.n_samples = 20000;
  cfg.seed = 17;
  const auto emp = empirical_distribution(sample(complete_graph(3), cfg));
  ASSERT_EQ(emp.size(), 3u);
  for (const auto& [_, p] : emp) EXPECT_NEAR(p, 1.0 / 3.0, 0.02);
}

TEST(Sample, UniformFullSet) {
  SamplerConfig cfg;
  cfg.mode = SamplerMode::kUniform;
  cfg.mean_photons = 6;
  cfg.n_samples = 5;
  for (const auto& s : sample(erdos_renyi(6, 0.3, 1), cfg)) EXPECT_EQ(s, (VertexList{0, 1, 2, 3, 4, 5}));
}

TEST(Sample, DeterministicAndSizedAndSorted) {
  const Graph g = erdos_renyi(12, 0.5, 8);
  for (auto mode : {SamplerMode::kEnumerate, SamplerMode::kMcmc, SamplerMode::kUniform}) {
    SamplerConfig cfg;
    cfg.mode = mode;
    cfg.mean_photons = 5;  // rounds down to 4
    cfg.n_samples = 50;
    cfg.seed = 3;
    const auto a = sample(g, cfg);
    EXPECT_EQ(a, sample(g, cfg)) << to_string(mode);
    ASSERT_EQ(a.size(), 50u);
    for (const auto& s : a) {
      EXPECT_EQ(s.size(), 4u);
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      if (mode != SamplerMode::kUniform) {
        EXPECT_GT(hafnian_induced(g, s), HafInt{0});
      }
    }
  }
}

TEST(Sample, ChainsAreDeterministic) {
  const Graph g = erdos_renyi(10, 0.6, 2);
  SamplerConfig cfg;
  cfg.mean_photons = 4;
  cfg.n_samples = 21;
  cfg.chains = 3;
  cfg.seed = 11;
  EXPECT_EQ(sample(g, cfg), sample(g, cfg));
  EXPECT_EQ(sample(g, cfg).size(), 21u);
}

TEST(Sample, McmcMatchesOracleOnSmallGraph) {
  const Graph g = erdos_renyi(8, 0.5, 21);
  SamplerConfig cfg;
  cfg.mean_photons = 4;
  cfg.n_samples = 20000;
  cfg.seed = 5;
  const auto emp = empirical_distribution(sample(g, cfg));
  EXPECT_LE(oracle::tv_distance(emp, oracle::conditioned_distribution(g, 4)), 0.1);
}

TEST(Sample, ZeroClicksAndErrors) {
  SamplerConfig cfg;
  cfg.mean_photons = 1;
  cfg.n_samples = 3;
  for (const auto& s : sample(complete_graph(3), cfg)) EXPECT_TRUE(s.empty());
  cfg.mean_photons = 4;
  EXPECT_THROW(sample(complete_graph(3), cfg), std::invalid_argument);
  cfg.mean_photons = 2;
  EXPECT_THROW(sample(Graph(5), cfg), NoPositiveWeight);
  cfg.mode = SamplerMode::kEnumerate;
  EXPECT_THROW(sample(Graph(5), cfg), NoPositiveWeight);
  EXPECT_THROW(parse_sampler_mode("exotic"), std::invalid_argument);
}

TEST(DensityBias, Examples) {
  const auto k = density_bias_report(complete_graph(8), 4, 200, 1);
  EXPECT_DOUBLE_EQ(k.sampled_mean, 1.0);
  EXPECT_DOUBLE_EQ(k.uniform_mean, 1.0);
  EXPECT_FALSE(k.fell_back);
  const auto e = density_bias_report(Graph(8), 4, 50, 1);
  EXPECT_TRUE(e.fell_back);
  EXPECT_EQ(e.sampled_mean, 0.0);
  const auto r = density_bias_report(erdos_renyi(16, 0.5, 3), 8, 2000, 9);
  EXPECT_GE(r.sampled_mean, r.uniform_mean);
}

}  // namespace
}  // namespace gbsc
