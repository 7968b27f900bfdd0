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
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/graph.hpp"
#include "gbsc/linalg.hpp"

namespace gbsc {

using HafInt = unsigned __int128;

inline constexpr std::size_t kDefaultHafnianCap = 40;

enum class HafnianBackend {
  /// Expansion along the lowest remaining row, memoized on the set of
  /// unmatched indices.
  kRecursive,
  /// Inclusion-exclusion over index pairs with power traces, O(2^(m/2) m^4).
  kPowerTrace,
};

class HafnianOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

/// Open-addressing memo keyed by 64-bit masks. Cleared in O(1) by bumping a
/// generation counter so a thread can reuse one table across calls.
template <typename Value>
class MaskMemo {
 public:
  void reset(std::size_t expected) {
    std::size_t cap = 64;
    while (cap < 2 * expected) cap <<= 1;
    if (cap > keys_.size()) {
      keys_.assign(cap, 0);
      values_.assign(cap, Value{});
      stamp_.assign(cap, 0);
      generation_ = 0;
    }
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    size_ = 0;
  }

  const Value* find(std::uint64_t key) const {
    std::size_t mask = keys_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (stamp_[i] != generation_) return nullptr;
      if (keys_[i] == key) return &values_[i];
    }
  }

  void insert(std::uint64_t key, const Value& value) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    std::size_t mask = keys_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (stamp_[i] != generation_) {
        stamp_[i] = generation_;
        keys_[i] = key;
        values_[i] = value;
        ++size_;
        return;
      }
      if (keys_[i] == key) {
        values_[i] = value;
        return;
      }
    }
  }

 private:
  static std::size_t hash(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  void grow() {
    std::vector<std::uint64_t> keys;
    std::vector<Value> values;
    std::vector<std::uint32_t> stamp;
    keys.swap(keys_);
    values.swap(values_);
    stamp.swap(stamp_);
    const std::uint32_t old_gen = generation_;
    keys_.assign(keys.size() * 2, 0);
    values_.assign(keys.size() * 2, Value{});
    stamp_.assign(keys.size() * 2, 0);
    generation_ = 1;
    size_ = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (stamp[i] == old_gen) insert(keys[i], values[i]);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<Value> values_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::size_t size_ = 0;
};

inline HafInt checked_add(HafInt a, HafInt b) {
  HafInt r;
  if (__builtin_add_overflow(a, b, &r)) throw HafnianOverflow("hafnian exceeds 128-bit range");
  return r;
}

/// Perfect matchings of the graph given by per-index neighbor masks.
///
/// Sparse inputs use the memoized row expansion directly. Dense inputs go
/// through the complement: with m_j the number of j-edge matchings of the
/// complement, Haf = sum_j (-1)^j m_j (n - 2j - 1)!!.
class BinaryHafnian {
 public:
  HafInt operator()(std::span<const std::uint64_t> adj) {
    const std::size_t n = adj.size();
    if (n % 2 == 1) return 0;
    if (n == 0) return 1;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t twice_edges = 0;
    for (auto row : adj) twice_edges += static_cast<std::size_t>(std::popcount(row));
    if (n >= 8 && 2 * twice_edges > n * (n - 1)) return dense(adj, full);
    adj_ = adj;
    memo_.reset(std::size_t{1} << std::min<std::size_t>(n / 2 + 2, 20));
    return count(full);
  }

 private:
  HafInt dense(std::span<const std::uint64_t> adj, std::uint64_t full) {
    const std::size_t n = adj.size();
    comp_.resize(n);
    for (std::size_t i = 0; i < n; ++i) comp_[i] = ~adj[i] & full & ~(std::uint64_t{1} << i);
    half_ = n / 2;
    matching_counts();
    // Signed accumulation; every partial sum is bounded by max(|term|).
    __int128 total = 0;
    __int128 dfact = 1;  // (n - 2j - 1)!! built from j = half downwards
    for (std::size_t j = half_ + 1; j-- > 0;) {
      const auto mj = static_cast<__int128>(counts_[j]);
      __int128 term;
      if (__builtin_mul_overflow(mj, dfact, &term)) throw HafnianOverflow("hafnian exceeds 128-bit range");
      total += (j % 2 == 0) ? term : -term;
      if (j > 0 && __builtin_mul_overflow(dfact, static_cast<__int128>(n - 2 * j + 1), &dfact))
        throw HafnianOverflow("hafnian exceeds 128-bit range");
    }
    return static_cast<HafInt>(total);
  }

  /// counts_[j] = number of j-edge matchings of comp_. Vertices are added
  /// one at a time; a state is the set of matched vertices among the
  /// frontier (added vertices with a neighbor not yet added), so the work
  /// is exponential only in the frontier width.
  void matching_counts() {
    const std::size_t n = comp_.size();
    const std::size_t width = half_ + 1;
    std::uint64_t added = 0;
    std::uint64_t frontier = 0;
    keys_.assign(1, 0);
    polys_.assign(width, 0);
    polys_[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      // Next vertex: smallest frontier afterwards, then most added neighbors.
      std::size_t v = n;
      int best_width = 0, best_links = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if ((added >> x) & 1U) continue;
        const std::uint64_t now = added | (std::uint64_t{1} << x);
        std::uint64_t f = (frontier | (std::uint64_t{1} << x)) & now;
        for (std::uint64_t t = f; t; t &= t - 1) {
          const auto y = static_cast<std::size_t>(std::countr_zero(t));
          if ((comp_[y] & ~now) == 0) f &= ~(std::uint64_t{1} << y);
        }
        const int w = std::popcount(f);
        const int links = std::popcount(comp_[x] & added);
        if (v == n || w < best_width || (w == best_width && links > best_links)) {
          v = x;
          best_width = w;
          best_links = links;
        }
      }
      const std::uint64_t vbit = std::uint64_t{1} << v;
      const std::uint64_t partners = comp_[v] & frontier;
      added |= vbit;
      std::uint64_t next_frontier = frontier | vbit;
      for (std::uint64_t t = next_frontier; t; t &= t - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(t));
        if ((comp_[y] & ~added) == 0) next_frontier &= ~(std::uint64_t{1} << y);
      }

      next_keys_.clear();
      next_polys_.clear();
      next_index_.reset(std::max<std::size_t>(16, 4 * keys_.size()));
      auto emit = [&](std::uint64_t key, std::size_t src, std::size_t shift) {
        key &= next_frontier;
        std::size_t at;
        if (const std::size_t* hit = next_index_.find(key)) {
          at = *hit;
        } else {
          at = next_keys_.size();
          next_keys_.push_back(key);
          next_polys_.resize(next_polys_.size() + width, 0);
          next_index_.insert(key, at);
        }
        HafInt* dst = &next_polys_[at * width];
        const HafInt* from = &polys_[src * width];
        for (std::size_t j = 0; j + shift < width; ++j)
          if (from[j]) dst[j + shift] = checked_add(dst[j + shift], from[j]);
      };
      for (std::size_t s = 0; s < keys_.size(); ++s) {
        const std::uint64_t key = keys_[s];
        emit(key, s, 0);
        for (std::uint64_t t = partners & ~key; t; t &= t - 1) emit(key | (t & (~t + 1)) | vbit, s, 1);
      }
      keys_.swap(next_keys_);
      polys_.swap(next_polys_);
      frontier = next_frontier;
    }
    counts_.assign(width, 0);
    for (std::size_t s = 0; s < keys_.size(); ++s)
      for (std::size_t j = 0; j < width; ++j) counts_[j] = checked_add(counts_[j], polys_[s * width + j]);
  }

  HafInt count(std::uint64_t mask) {
    if (mask == 0) return 1;
    const int i = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    std::uint64_t cand = adj_[static_cast<std::size_t>(i)] & rest;
    if (cand == 0) return 0;
    if (std::popcount(mask) == 2) return 1;
    if (const HafInt* hit = memo_.find(mask)) return *hit;
    HafInt total = 0;
    while (cand) {
      const std::uint64_t bit = cand & (~cand + 1);
      cand ^= bit;
      total = checked_add(total, count(rest & ~bit));
    }
    memo_.insert(mask, total);
    return total;
  }

  std::span<const std::uint64_t> adj_;
  MaskMemo<HafInt> memo_;
  std::vector<std::uint64_t> comp_;
  std::size_t half_ = 0;
  std::vector<std::uint64_t> keys_, next_keys_;
  std::vector<HafInt> polys_, next_polys_, counts_;
  MaskMemo<std::size_t> next_index_;
};

inline BinaryHafnian& thread_binary_hafnian() {
  thread_local BinaryHafnian h;
  return h;
}

class RealHafnian {
 public:
  double operator()(const SymMatrix& a) {
    a_ = &a;
    const std::size_t n = a.dim();
    if (n % 2 == 1) return 0.0;
    if (n == 0) return 1.0;
    memo_.reset(1024);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return static_cast<double>(count(full));
  }

 private:
  long double count(std::uint64_t mask) {
    if (mask == 0) return 1.0L;
    if (const long double* hit = memo_.find(mask)) return *hit;
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t rest = mask & (mask - 1);
    long double total = 0.0L;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(r));
      const double aij = (*a_)(i, j);
      if (aij != 0.0) total += static_cast<long double>(aij) * count(rest & ~(std::uint64_t{1} << j));
    }
    memo_.insert(mask, total);
    return total;
  }

  const SymMatrix* a_ = nullptr;
  MaskMemo<long double> memo_;
};

inline void check_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap || dim > 64)
    throw std::invalid_argument("hafnian dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// Power-trace hafnian: sum over subsets X of the index pairs (2j, 2j+1) of
/// (-1)^(m/2 - |X|) [x^(m/2)] exp(sum_k tr((A_X P)^k) x^k / 2k), where P
/// swaps the two members of each pair.
inline double hafnian_power_trace(const SymMatrix& a) {
  const std::size_t n = a.dim();
  if (n % 2 == 1) return 0.0;
  if (n == 0) return 1.0;
  const std::size_t half = n / 2;
  long double total = 0.0L;
  std::vector<long double> b;
  std::vector<long double> power;
  std::vector<long double> next;
  std::vector<long double> traces(half + 1);
  std::vector<long double> series(half + 1);
  std::vector<std::size_t> idx;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << half); ++subset) {
    idx.clear();
    for (std::size_t j = 0; j < half; ++j)
      if ((subset >> j) & 1U) {
        idx.push_back(2 * j);
        idx.push_back(2 * j + 1);
      }
    const std::size_t d = idx.size();
    // b = A_X P: column c of b is column partner(c) of A_X.
    b.assign(d * d, 0.0L);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) b[r * d + c] = a(idx[r], idx[c ^ 1]);
    power = b;
    for (std::size_t k = 1; k <= half; ++k) {
      long double tr = 0.0L;
      for (std::size_t r = 0; r < d; ++r) tr += power[r * d + r];
      traces[k] = tr / (2.0L * static_cast<long double>(k));
      if (k == half) break;
      next.assign(d * d, 0.0L);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t t = 0; t < d; ++t) {
          const long double prt = power[r * d + t];
          if (prt == 0.0L) continue;
          for (std::size_t c = 0; c < d; ++c) next[r * d + c] += prt * b[t * d + c];
        }
      power.swap(next);
    }
    // exp of the power series, truncated at x^half.
    series[0] = 1.0L;
    for (std::size_t j = 1; j <= half; ++j) {
      long double s = 0.0L;
      for (std::size_t k = 1; k <= j; ++k) s += static_cast<long double>(k) * traces[k] * series[j - k];
      series[j] = s / static_cast<long double>(j);
    }
    const bool negative = ((half - static_cast<std::size_t>(std::popcount(subset))) % 2) == 1;
    total += negative ? -series[half] : series[half];
  }
  return static_cast<double>(total);
}

/// Hafnian of a real symmetric matrix. Odd dimension gives 0, the empty
/// matrix gives 1.
inline double hafnian(const SymMatrix& a, HafnianBackend backend = HafnianBackend::kRecursive,
                      std::size_t cap = kDefaultHafnianCap) {
  detail::check_cap(a.dim(), cap);
  if (backend == HafnianBackend::kPowerTrace) return hafnian_power_trace(a);
  thread_local detail::RealHafnian h;
  return h(a);
}

/// Exact hafnian of a 0/1 symmetric matrix (zero diagonal). Throws
/// HafnianOverflow if the count leaves the 128-bit range.
inline HafInt hafnian_exact(const SymMatrix& a, std::size_t cap = kDefaultHafnianCap) {
  detail::check_cap(a.dim(), cap);
  if (!a.is_binary()) throw std::invalid_argument("exact hafnian needs a 0/1 matrix");
  std::vector<std::uint64_t> adj(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j && a(i, j) == 1.0) adj[i] |= std::uint64_t{1} << j;
  return detail::thread_binary_hafnian()(adj);
}

/// Haf of the adjacency submatrix on s, i.e. the perfect matchings of g[s].
inline HafInt hafnian_induced(const Graph& g, std::span<const Vertex> s, std::size_t cap = kDefaultHafnianCap) {
  detail::check_cap(s.size(), cap);
  std::uint64_t local[64];
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::uint64_t m = 0;
    const Bitset& row = g.row(s[a]);
    for (std::size_t b = 0; b < s.size(); ++b)
      if (row.test(s[b])) m |= std::uint64_t{1} << b;
    local[a] = m;
  }
  return detail::thread_binary_hafnian()(std::span<const std::uint64_t>(local, s.size()));
}

inline double to_double(HafInt x) { return static_cast<double>(x); }

inline std::string to_string(HafInt x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return s;
}

/// Exhaustive perfect-matching enumeration without memoization. Oracle for
/// graphs with at most 16 vertices.
inline std::uint64_t perfect_matching_count(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 16) throw std::invalid_argument("perfect matching oracle is limited to 16 vertices");
  if (n % 2 == 1) return 0;
  std::vector<bool> matched(n, false);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self) -> void {
    Vertex first = n;
    for (Vertex v = 0; v < n; ++v)
      if (!matched[v]) {
        first = v;
        break;
      }
    if (first == n) {
      ++count;
      return;
    }
    matched[first] = true;
    for (Vertex u = first + 1; u < n; ++u)
      if (!matched[u] && g.adjacent(first, u)) {
        matched[u] = true;
        self(self);
        matched[u] = false;
      }
    matched[first] = false;
  };
  rec(rec);
  return count;
}

}  // namespace gbsc
