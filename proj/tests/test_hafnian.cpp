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
#include <random>

#include "gbsc/hafnian.hpp"
#include "gbsc/linalg.hpp"
#include "oracles.hpp"

namespace gbsc {
namespace {

SymMatrix random_real(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, u(rng));
  return a;
}

std::vector<std::vector<double>> rows_of(const SymMatrix& a) {
  std::vector<std::vector<double>> r(a.dim(), std::vector<double>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r[i][j] = a(i, j);
  return r;
}

TEST(Hafnian, SmallExamples) {
  for (auto backend : {HafnianBackend::kRecursive, HafnianBackend::kPowerTrace}) {
    EXPECT_EQ(hafnian(SymMatrix(0), backend), 1.0);
    EXPECT_EQ(hafnian(SymMatrix({{0, 1}, {1, 0}}), backend), 1.0);
    EXPECT_NEAR(hafnian(adjacency_matrix(complete_graph(4)), backend), 3.0, 1e-12);
    EXPECT_EQ(hafnian(adjacency_matrix(complete_graph(5)), backend), 0.0);
    EXPECT_EQ(hafnian(random_real(7, 1), backend), 0.0);
  }
  EXPECT_EQ(to_string(hafnian_exact(adjacency_matrix(complete_graph(4)))), "3");
  EXPECT_EQ(to_string(hafnian_exact(SymMatrix(0))), "1");
}

TEST(Hafnian, CompleteGraphIsDoubleFactorial) {
  // Haf(K_{2m}) = (2m-1)!!
  HafInt expect = 1;
  for (std::size_t m = 1; m <= 12; ++m) {
    expect *= 2 * m - 1;
    EXPECT_EQ(hafnian_exact(adjacency_matrix(complete_graph(2 * m))), expect) << m;
    EXPECT_NEAR(hafnian(adjacency_matrix(complete_graph(2 * m))), to_double(expect), 1e-9 * to_double(expect));
  }
}

TEST(Hafnian, ExactMatchesPairingOracle) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = erdos_renyi(2 + 2 * (s % 7), 0.2 + 0.1 * (s % 7), s);
    const auto expect = oracle::perfect_matchings(oracle::dense_adjacency(g));
    EXPECT_EQ(hafnian_exact(adjacency_matrix(g)), expect);
    EXPECT_EQ(perfect_matching_count(g), expect);
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(hafnian_induced(g, all), expect);
  }
}

TEST(Hafnian, BackendsAgreeOnBinaryUpToTwenty) {
  for (std::size_t n = 2; n <= 20; n += 2)
    for (double p : {0.3, 0.6, 0.9}) {
      const Graph g = erdos_renyi(n, p, n * 100 + static_cast<std::uint64_t>(p * 10));
      const SymMatrix a = adjacency_matrix(g);
      const double exact = to_double(hafnian_exact(a));
      EXPECT_NEAR(hafnian(a, HafnianBackend::kRecursive), exact, 1e-9 * std::max(1.0, exact));
      EXPECT_NEAR(hafnian(a, HafnianBackend::kPowerTrace), exact, 1e-9 * std::max(1.0, exact));
    }
}

TEST(Hafnian, RealMatricesMatchPairingSum) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 2 + 2 * (s % 6);
    const SymMatrix a = random_real(n, s);
    const double expect = oracle::hafnian_pairings(rows_of(a));
    const double tol = 1e-9 * std::max(1.0, std::abs(expect));
    EXPECT_NEAR(hafnian(a, HafnianBackend::kRecursive), expect, tol);
    EXPECT_NEAR(hafnian(a, HafnianBackend::kPowerTrace), expect, tol);
  }
}

TEST(Hafnian, DiagonalIsIgnoredByExactPath) {
  // Loops do not contribute to perfect matchings.
  SymMatrix a = adjacency_matrix(cycle_graph(6));
  a.set(0, 0, 1.0);
  a.set(3, 3, 1.0);
  EXPECT_EQ(hafnian_exact(a), HafInt{2});
}

TEST(Hafnian, Errors) {
  EXPECT_THROW(hafnian(SymMatrix(42)), std::invalid_argument);
  EXPECT_THROW(hafnian(SymMatrix(12), HafnianBackend::kRecursive, 10), std::invalid_argument);
  EXPECT_THROW(hafnian_exact(SymMatrix({{0, 2}, {2, 0}})), std::invalid_argument);
  EXPECT_THROW(SymMatrix({{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix({{0, 1, 0}, {1, 0}}), std::invalid_argument);
}

TEST(PerfectMatchings, Examples) {
  EXPECT_EQ(perfect_matching_count(complete_graph(4)), 3u);
  EXPECT_EQ(perfect_matching_count(cycle_graph(6)), 2u);
  EXPECT_EQ(perfect_matching_count(cycle_graph(5)), 0u);
  EXPECT_EQ(perfect_matching_count(petersen_graph()), 6u);
}

TEST(Jacobi, ReconstructsSpectrum) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const SymMatrix a = random_real(1 + s % 15, s);
    const SymEigen e = jacobi_eigen(a);
    for (std::size_t k = 1; k < e.dim; ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
    for (std::size_t i = 0; i < e.dim; ++i)
      for (std::size_t k = 0; k < e.dim; ++k) {
        double av = 0.0;
        for (std::size_t j = 0; j < e.dim; ++j) av += a(i, j) * e.vec(j, k);
        EXPECT_NEAR(av, e.values[k] * e.vec(i, k), 1e-10);
      }
  }
}

}  // namespace
}  // namespace gbsc
