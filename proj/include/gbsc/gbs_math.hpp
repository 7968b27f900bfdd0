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
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "gbsc/graph.hpp"
#include "gbsc/linalg.hpp"

namespace gbsc {

/// A = U diag(lambdas) U^T with U unitary (row-major) and lambdas sorted
/// descending.
struct Takagi {
  std::vector<std::complex<double>> unitary;
  std::vector<double> lambdas;
  std::size_t dim = 0;

  std::complex<double> u(std::size_t row, std::size_t col) const { return unitary[row * dim + col]; }

  /// max_ij |(U diag(lambdas) U^T)_ij - a_ij|
  double reconstruction_error(const SymMatrix& a) const {
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::complex<double> s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) s += u(i, k) * lambdas[k] * u(j, k);
        err = std::max(err, std::abs(s - a(i, j)));
      }
    return err;
  }
};

/// Takagi factorization of a real symmetric matrix via its eigenbasis: a
/// negative eigenvalue d contributes |d| with the eigenvector multiplied by i.
inline Takagi takagi(const SymMatrix& a) {
  const std::size_t n = a.dim();
  const SymEigen eig = jacobi_eigen(a);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(eig.values[x]) > std::abs(eig.values[y]);
  });
  Takagi out;
  out.dim = n;
  out.lambdas.resize(n);
  out.unitary.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double d = eig.values[order[k]];
    out.lambdas[k] = std::abs(d);
    const std::complex<double> phase = d >= 0.0 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) out.unitary[i * n + k] = phase * eig.vec(i, order[k]);
  }
  return out;
}

/// sum_k (c l_k)^2 / (1 - (c l_k)^2)
inline double mean_photon_number(std::span<const double> lambdas, double c) {
  double total = 0.0;
  for (double l : lambdas) {
    const double x = c * l;
    total += x * x / (1.0 - x * x);
  }
  return total;
}

/// Scaling c > 0 with mean_photon_number(lambdas, c) = n_bar, found by
/// bisection on (0, 1/max lambda). n_bar = 0 gives c = 0.
inline double solve_scaling(std::span<const double> lambdas, double n_bar) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) throw std::invalid_argument("target mean photon number must be >= 0");
  if (n_bar == 0.0) return 0.0;
  double lmax = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("singular values must be nonnegative");
    lmax = std::max(lmax, l);
  }
  if (lmax == 0.0) throw std::invalid_argument("mean photon number unreachable: all singular values are zero");
  double lo = 0.0;
  double hi = 1.0 / lmax;
  // The map is strictly increasing and diverges at hi; stop when the
  // bracket no longer shrinks in floating point.
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mean_photon_number(lambdas, mid) < n_bar)
      lo = mid;
    else
      hi = mid;
  }
  const double r_lo = std::abs(mean_photon_number(lambdas, lo) - n_bar);
  const double r_hi = hi * lmax < 1.0 ? std::abs(mean_photon_number(lambdas, hi) - n_bar)
                                      : std::numeric_limits<double>::infinity();
  return r_hi < r_lo ? hi : lo;
}

struct GbsEncoding {
  Takagi decomposition;
  double scaling = 0.0;
  std::vector<double> squeezing;  // r_k = artanh(c * lambda_k)
  double mean_photons = 0.0;
};

/// Programs a graph's adjacency matrix for a target mean photon number.
inline GbsEncoding encode_graph(const Graph& g, double n_bar) {
  if (g.empty()) throw std::invalid_argument("cannot encode an empty graph");
  GbsEncoding enc;
  enc.decomposition = takagi(adjacency_matrix(g));
  enc.mean_photons = n_bar;
  enc.scaling = solve_scaling(enc.decomposition.lambdas, n_bar);
  for (double l : enc.decomposition.lambdas) enc.squeezing.push_back(std::atanh(enc.scaling * l));
  return enc;
}

/// Spectral lower bound on the chromatic number, 1 + lambda_max / -lambda_min.
/// Edgeless graphs give 1.
inline double hoffman_bound(const Graph& g) {
  if (g.num_edges() == 0) return 1.0;
  const SymEigen eig = jacobi_eigen(adjacency_matrix(g));
  return 1.0 + eig.values.back() / -eig.values.front();
}

/// ceil(hoffman_bound(g)), tolerant of round-off just above an integer.
inline std::size_t hoffman_colors(const Graph& g) {
  const double h = hoffman_bound(g);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(h - 1e-9)));
}

}  // namespace gbsc
