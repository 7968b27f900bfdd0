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
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/graph.hpp"

namespace gbsc {

/// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  /// Throws std::invalid_argument unless `rows` is square, symmetric and finite.
  explicit SymMatrix(const std::vector<std::vector<double>>& rows) : SymMatrix(rows.size()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows[i].size() != dim_) throw std::invalid_argument("matrix is not square");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!std::isfinite(rows[i][j])) throw std::invalid_argument("matrix has non-finite entries");
        data_[i * dim_ + j] = rows[i][j];
      }
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                      ")");
  }

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
  }

  bool is_binary() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return x == 0.0 || x == 1.0; });
  }

  SymMatrix submatrix(std::span<const std::size_t> idx) const {
    SymMatrix out(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out.data_[a * idx.size() + b] = (*this)(idx[a], idx[b]);
    return out;
  }

  double frobenius_norm() const {
    return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.num_vertices());
  for (const auto& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

/// Eigenpairs of a real symmetric matrix. vectors is row-major with the k-th
/// eigenvector in column k.
struct SymEigen {
  std::vector<double> values;
  std::vector<double> vectors;
  std::size_t dim = 0;
  double vec(std::size_t row, std::size_t k) const { return vectors[row * dim + k]; }
};

/// Cyclic Jacobi rotations in fixed (p, q) sweep order until the
/// off-diagonal Frobenius norm drops below 1e-12 (scaled by ||A||_F when
/// that exceeds 1). Eigenvalues are returned in ascending order.
inline SymEigen jacobi_eigen(const SymMatrix& a, int max_sweeps = 100) {
  const std::size_t n = a.dim();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = 1e-12 * std::max(1.0, a.frobenius_norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += m[i * n + j] * m[i * n + j];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (apq == 0.0) continue;
        const double app = m[p * n + p];
        const double aqq = m[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m[k * n + p];
          const double mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m[p * n + k];
          const double mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m[x * n + x] < m[y * n + y]; });
  SymEigen out;
  out.dim = n;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m[order[k] * n + order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = v[i * n + order[k]];
  }
  return out;
}

}  // namespace gbsc
