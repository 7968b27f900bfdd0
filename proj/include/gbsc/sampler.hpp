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
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsc/graph.hpp"
#include "gbsc/hafnian.hpp"
#include "gbsc/random.hpp"

namespace gbsc {

/// Threshold-detector outcome over the modes of an encoded graph.
struct PhotonPattern {
  std::vector<std::uint8_t> clicks;

  static PhotonPattern from_subset(std::size_t modes, std::span<const Vertex> subset) {
    PhotonPattern p{std::vector<std::uint8_t>(modes, 0)};
    for (Vertex v : subset) {
      if (v >= modes) throw std::out_of_range("mode index out of range");
      p.clicks[v] = 1;
    }
    return p;
  }

  VertexList subset() const {
    VertexList out;
    for (std::size_t k = 0; k < clicks.size(); ++k)
      if (clicks[k]) out.push_back(k);
    return out;
  }
};

enum class SamplerMode { kEnumerate, kMcmc, kUniform };

inline std::string to_string(SamplerMode m) {
  switch (m) {
    case SamplerMode::kEnumerate:
      return "enumerate";
    case SamplerMode::kMcmc:
      return "mcmc";
    case SamplerMode::kUniform:
      return "uniform";
  }
  return "?";
}

inline SamplerMode parse_sampler_mode(const std::string& s) {
  if (s == "enumerate") return SamplerMode::kEnumerate;
  if (s == "mcmc") return SamplerMode::kMcmc;
  if (s == "uniform") return SamplerMode::kUniform;
  throw std::invalid_argument("unknown sampler mode '" + s + "'");
}

inline constexpr std::size_t kEnumerateCap = 18;

struct SamplerConfig {
  SamplerMode mode = SamplerMode::kMcmc;
  std::size_t n_samples = 1;
  /// Requested click count; odd values are rounded down.
  std::size_t mean_photons = 2;
  /// Defaults to 1000 * modes.
  std::optional<std::size_t> burn_in;
  /// Defaults to 10 * clicks.
  std::optional<std::size_t> thinning;
  std::size_t chains = 1;
  std::uint64_t seed = 0;
};

/// Raised when no size-n̄ subset with nonzero hafnian is reachable.
class NoPositiveWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t effective_clicks(std::size_t mean_photons) { return mean_photons - mean_photons % 2; }

/// c^|s| Haf(A_s)^2.
inline double pattern_weight(const Graph& g, std::span<const Vertex> s, double c) {
  const double haf = to_double(hafnian_induced(g, s));
  return std::pow(c, static_cast<double>(s.size())) * haf * haf;
}

using Distribution = std::map<VertexList, double>;

/// Every binary pattern with nonzero weight, normalized.
inline Distribution enumerate_distribution(const Graph& g, double c) {
  const std::size_t n = g.num_vertices();
  if (n > kEnumerateCap) throw std::invalid_argument("enumeration is limited to " + std::to_string(kEnumerateCap) + " modes");
  Distribution dist;
  double total = 0.0;
  VertexList s;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 == 1) continue;
    s.clear();
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.push_back(v);
    const double w = pattern_weight(g, s, c);
    if (w > 0.0) {
      dist.emplace(s, w);
      total += w;
    }
  }
  for (auto& [_, p] : dist) p /= total;
  return dist;
}

/// Restriction of a distribution to patterns with exactly `clicks` ones,
/// renormalized. Empty if the slice carries no mass.
inline Distribution condition_on_size(const Distribution& dist, std::size_t clicks) {
  Distribution out;
  double total = 0.0;
  for (const auto& [s, p] : dist)
    if (s.size() == clicks) {
      out.emplace(s, p);
      total += p;
    }
  for (auto& [_, p] : out) p /= total;
  return out;
}

namespace detail {

/// Weights Haf^2 of every size-k subset (lexicographic order).
inline Distribution size_slice(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  Distribution out;
  if (k > n) return out;
  VertexList s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    const double haf = to_double(hafnian_induced(g, s));
    if (haf > 0.0) out.emplace(s, haf * haf);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

/// Greedy dense start: repeatedly add the vertex with most neighbors in the
/// current set (then highest degree, then lowest id).
inline VertexList greedy_dense_subset(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  Bitset in(n);
  VertexList s;
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = n;
    std::size_t best_in = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in.test(v)) continue;
      const std::size_t inside = g.row(v).count_and(in);
      const std::size_t deg = g.degree(v);
      if (best == n || inside > best_in || (inside == best_in && deg > best_deg)) {
        best = v;
        best_in = inside;
        best_deg = deg;
      }
    }
    in.set(best);
    s.push_back(best);
  }
  return s;
}

inline std::vector<VertexList> uniform_chain(std::size_t n, std::size_t k, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexList> out;
  VertexList perm(n);
  for (std::size_t t = 0; t < count; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + uniform_index(rng, n - i)]);
    VertexList s(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<VertexList> enumerate_chain(const Distribution& slice, std::size_t count, std::uint64_t seed) {
  std::vector<const VertexList*> patterns;
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& [s, w] : slice) {
    total += w;
    patterns.push_back(&s);
    cumulative.push_back(total);
  }
  Rng rng(seed);
  std::vector<VertexList> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double u = uniform_unit(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    out.push_back(*patterns[static_cast<std::size_t>(it - cumulative.begin())]);
  }
  return out;
}

/// Metropolis chain on size-k subsets with single swap proposals and target
/// Haf(A_s)^2. While the current weight is zero, a proposal is accepted iff
/// it does not lose induced edges.
inline std::vector<VertexList> mcmc_chain(const Graph& g, std::size_t k, std::size_t count, std::size_t burn_in,
                                          std::size_t thinning, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  VertexList current = greedy_dense_subset(g, k);
  Bitset in(n);
  for (Vertex v : current) in.set(v);
  VertexList outside;
  for (Vertex v = 0; v < n; ++v)
    if (!in.test(v)) outside.push_back(v);

  HafInt weight = hafnian_induced(g, current);
  std::size_t edges = induced_edge_count(g, current);
  std::vector<VertexList> samples;
  samples.reserve(count);
  if (outside.empty() || k == 0) {
    if (weight == 0) throw NoPositiveWeight("no size-" + std::to_string(k) + " subset has positive weight");
    VertexList s = current;
    std::sort(s.begin(), s.end());
    samples.assign(count, s);
    return samples;
  }

  VertexList proposal(k);
  const std::size_t total_steps = burn_in + count * thinning;
  for (std::size_t step = 1; step <= total_steps; ++step) {
    const std::size_t a = uniform_index(rng, k);
    const std::size_t b = uniform_index(rng, outside.size());
    const Vertex leaving = current[a];
    const Vertex entering = outside[b];
    std::copy(current.begin(), current.end(), proposal.begin());
    proposal[a] = entering;
    const HafInt next_weight = hafnian_induced(g, proposal);
    in.reset(leaving);
    const std::size_t next_edges = edges - g.row(leaving).count_and(in) + g.row(entering).count_and(in);
    in.set(leaving);

    bool accept;
    if (weight == 0) {
      accept = next_edges >= edges;
    } else if (next_weight >= weight) {
      accept = true;
    } else {
      const double ratio = to_double(next_weight) / to_double(weight);
      accept = uniform_unit(rng) < ratio * ratio;
    }
    if (accept) {
      in.reset(leaving);
      in.set(entering);
      current[a] = entering;
      outside[b] = leaving;
      weight = next_weight;
      edges = next_edges;
    }
    if (step == burn_in && weight == 0)
      throw NoPositiveWeight("chain found no positive-weight size-" + std::to_string(k) + " subset during burn-in");
    if (step > burn_in && (step - burn_in) % thinning == 0) {
      if (weight == 0) throw NoPositiveWeight("chain found no positive-weight size-" + std::to_string(k) + " subset");
      VertexList s = current;
      std::sort(s.begin(), s.end());
      samples.push_back(std::move(s));
    }
  }
  return samples;
}

}  // namespace detail

/// Vertex subsets of size effective_clicks(cfg.mean_photons), each sorted.
/// Deterministic for a fixed (graph, cfg).
inline std::vector<VertexList> sample(const Graph& g, const SamplerConfig& cfg) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = effective_clicks(cfg.mean_photons);
  if (cfg.n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (cfg.chains < 1) throw std::invalid_argument("chains must be >= 1");
  if (k > n) throw std::invalid_argument("mean photon number exceeds the number of modes");
  if (k == 0) return std::vector<VertexList>(cfg.n_samples);

  if (cfg.mode == SamplerMode::kEnumerate) {
    if (n > kEnumerateCap)
      throw std::invalid_argument("enumerate mode is limited to " + std::to_string(kEnumerateCap) + " modes");
    const Distribution slice = detail::size_slice(g, k);
    if (slice.empty()) throw NoPositiveWeight("no size-" + std::to_string(k) + " subset has positive weight");
    return detail::enumerate_chain(slice, cfg.n_samples, cfg.seed);
  }

  const std::size_t burn_in = cfg.burn_in.value_or(1000 * n);
  const std::size_t thinning = std::max<std::size_t>(1, cfg.thinning.value_or(10 * k));
  std::vector<std::future<std::vector<VertexList>>> chains;
  for (std::size_t c = 0; c < cfg.chains; ++c) {
    const std::size_t count = cfg.n_samples / cfg.chains + (c < cfg.n_samples % cfg.chains ? 1 : 0);
    const std::uint64_t seed = split_seed(cfg.seed, c);
    const auto policy = cfg.chains == 1 ? std::launch::deferred : std::launch::async;
    if (cfg.mode == SamplerMode::kUniform)
      chains.push_back(std::async(policy, [=] { return detail::uniform_chain(n, k, count, seed); }));
    else
      chains.push_back(
          std::async(policy, [=, &g] { return detail::mcmc_chain(g, k, count, burn_in, thinning, seed); }));
  }
  std::vector<VertexList> out;
  for (auto& f : chains) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// Empirical pattern frequencies.
inline Distribution empirical_distribution(std::span<const VertexList> samples) {
  Distribution out;
  for (const auto& s : samples) out[s] += 1.0;
  for (auto& [_, p] : out) p /= static_cast<double>(samples.size());
  return out;
}

inline double total_variation(const Distribution& p, const Distribution& q) {
  double tv = 0.0;
  for (const auto& [s, ps] : p) {
    auto it = q.find(s);
    tv += std::abs(ps - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [s, qs] : q)
    if (!p.contains(s)) tv += qs;
  return 0.5 * tv;
}

struct DensityBias {
  double sampled_mean = 0.0;
  double uniform_mean = 0.0;
  /// True when the hafnian sampler had no positive-weight subset and the
  /// sampled side was drawn uniformly instead.
  bool fell_back = false;
};

/// Mean induced density of MCMC samples versus uniform size-n̄ subsets with
/// the same budget.
inline DensityBias density_bias_report(const Graph& g, std::size_t mean_photons, std::size_t n_samples,
                                       std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.mode = SamplerMode::kMcmc;
  cfg.mean_photons = mean_photons;
  cfg.n_samples = n_samples;
  cfg.seed = seed;
  SamplerConfig uniform = cfg;
  uniform.mode = SamplerMode::kUniform;
  uniform.seed = split_seed(seed, 0xD5);

  DensityBias out;
  std::vector<VertexList> hafnian_samples;
  try {
    hafnian_samples = sample(g, cfg);
  } catch (const NoPositiveWeight&) {
    out.fell_back = true;
    SamplerConfig fallback = uniform;
    fallback.seed = seed;
    hafnian_samples = sample(g, fallback);
  }
  const auto uniform_samples = sample(g, uniform);
  for (const auto& s : hafnian_samples) out.sampled_mean += induced_density(g, s);
  for (const auto& s : uniform_samples) out.uniform_mean += induced_density(g, s);
  out.sampled_mean /= static_cast<double>(hafnian_samples.size());
  out.uniform_mean /= static_cast<double>(uniform_samples.size());
  return out;
}

}  // namespace gbsc
