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
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gbsc/augmented.hpp"
#include "gbsc/clique.hpp"
#include "gbsc/coloring.hpp"
#include "gbsc/gbs_math.hpp"
#include "gbsc/graph.hpp"
#include "gbsc/random.hpp"
#include "gbsc/sampler.hpp"

namespace gbsc {

struct GbscConfig {
  /// Mode, burn-in, thinning and chain count are taken from here; sample
  /// count, click number and seed are set per round.
  SamplerConfig sampler;
  std::size_t samples_per_round = 6;
  /// Plateau-search iterations; defaults to |H|.
  std::optional<std::size_t> search_iterations;
  std::size_t stall_rounds = 1;
  std::uint64_t seed = 0;
};

/// Candidate cliques of complement(augment(h, k)).
struct CliqueCandidates {
  AugmentedGraph augmented;
  Graph complement;
  std::vector<VertexList> cliques;
  bool sampler_fell_back = false;

  std::size_t k() const { return augmented.k(); }
};

/// k = ceil(Hoffman bound of h); samples_per_round * |h| subsets of the
/// complemented augmented graph with |h| clicks, each shrunk to a clique and
/// grown by local search.
inline CliqueCandidates find_cliques(const Graph& h, const GbscConfig& cfg) {
  if (h.empty()) throw std::invalid_argument("find_cliques needs a nonempty graph");
  if (cfg.samples_per_round < 1) throw std::invalid_argument("samples_per_round must be >= 1");
  const std::size_t size = h.num_vertices();
  CliqueCandidates out{AugmentedGraph(h, hoffman_colors(h)), Graph(), {}, false};
  out.complement = complement(out.augmented.graph());

  SamplerConfig sc = cfg.sampler;
  sc.n_samples = cfg.samples_per_round * size;
  sc.mean_photons = size;
  sc.seed = split_seed(cfg.seed, 1);
  std::vector<VertexList> samples;
  try {
    samples = sample(out.complement, sc);
  } catch (const NoPositiveWeight&) {
    out.sampler_fell_back = true;
    sc.mode = SamplerMode::kUniform;
    samples = sample(out.complement, sc);
  }

  const std::size_t iterations = cfg.search_iterations.value_or(size);
  const std::uint64_t shrink_seed = split_seed(cfg.seed, 2);
  const std::uint64_t search_seed = split_seed(cfg.seed, 3);
  out.cliques.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const VertexList start = shrink(out.complement, samples[i], split_seed(shrink_seed, i));
    out.cliques.push_back(search(out.complement, start, iterations, split_seed(search_seed, i)));
  }
  return out;
}

/// Selection key of a candidate: (|C|, -colors used, -dsatur(H'), -density(H'))
/// with H' = h minus the projection of C. Larger is better.
struct CliqueKey {
  std::size_t size = 0;
  std::size_t colors_used = 0;
  std::size_t residual_colors = 0;
  double residual_density = 0.0;

  bool better_than(const CliqueKey& o) const {
    return std::make_tuple(size, o.colors_used, o.residual_colors, o.residual_density) >
           std::make_tuple(o.size, colors_used, residual_colors, residual_density);
  }
};

inline CliqueKey clique_key(const Graph& h, std::span<const Vertex> clique, const AugmentedGraph& aug) {
  CliqueKey key;
  key.size = clique.size();
  std::set<Color> colors;
  Bitset removed(h.num_vertices());
  for (const auto& pv : project(aug, clique)) {
    colors.insert(pv.color);
    removed.set(pv.vertex);
  }
  key.colors_used = colors.size();
  VertexList rest;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (!removed.test(v)) rest.push_back(v);
  if (!rest.empty()) {
    const Graph residual = induced_subgraph(h, rest).graph;
    key.residual_colors = dsatur(residual).palette_size();
    key.residual_density = rest.size() > 1 ? density(residual) : 0.0;
  }
  return key;
}

/// Lexicographic argmax of clique_key; the first occurrence wins ties.
inline std::size_t best_clique_index(const Graph& h, std::span<const VertexList> candidates,
                                     const AugmentedGraph& aug) {
  if (candidates.empty()) throw std::invalid_argument("best_clique needs at least one candidate");
  std::map<VertexList, CliqueKey> seen;
  std::size_t best = 0;
  CliqueKey best_key;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    VertexList sorted = candidates[i];
    std::sort(sorted.begin(), sorted.end());
    auto it = seen.find(sorted);
    if (it != seen.end()) continue;  // a repeat can never beat its first occurrence
    const CliqueKey key = clique_key(h, sorted, aug);
    seen.emplace(std::move(sorted), key);
    if (i == 0 || key.better_than(best_key)) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

inline VertexList best_clique(const Graph& h, std::span<const VertexList> candidates, const AugmentedGraph& aug) {
  return candidates[best_clique_index(h, candidates, aug)];
}

struct RoundTrace {
  std::size_t round = 0;
  std::size_t k = 0;
  std::size_t residual_size = 0;
  std::size_t candidates = 0;
  /// (original vertex, assigned color) pairs colored this round.
  std::vector<ProjectedVertex> chosen;
  std::size_t colors_consumed = 0;
  bool fallback = false;

  std::string to_string() const {
    std::ostringstream os;
    os << "round=" << round << " k=" << k << " residual=" << residual_size << " candidates=" << candidates
       << " colors=" << colors_consumed << " fallback=" << (fallback ? 1 : 0) << " chosen=";
    for (std::size_t i = 0; i < chosen.size(); ++i) os << (i ? "," : "") << chosen[i].vertex << ':' << chosen[i].color;
    return os.str();
  }
};

struct GbscResult {
  Coloring coloring;
  std::vector<RoundTrace> rounds;
  /// Vertices left in the placeholder class when no conflict remained.
  std::size_t placeholder_vertices = 0;
};

/// Colors g round by round. Every vertex starts in a shared placeholder
/// class; each round picks the best sampled clique of the complemented
/// augmented residual graph, gives its vertices fresh colors and removes
/// them. The loop ends when the placeholder class has no internal edge; if
/// it is nonempty at that point it counts as one more color.
inline GbscResult gbsc_color(const Graph& g, const GbscConfig& cfg) {
  if (cfg.stall_rounds < 1) throw std::invalid_argument("stall_rounds must be >= 1");
  const std::size_t n = g.num_vertices();
  GbscResult result;
  Coloring col(n);
  VertexList residual(n);
  std::iota(residual.begin(), residual.end(), 0);
  std::size_t offset = 0;
  std::size_t stalled = 0;

  for (std::size_t round = 0;; ++round) {
    const InducedSubgraph h = induced_subgraph(g, residual);
    if (h.graph.num_edges() == 0) break;

    GbscConfig round_cfg = cfg;
    round_cfg.seed = split_seed(cfg.seed, round);
    const CliqueCandidates cands = find_cliques(h.graph, round_cfg);
    const VertexList chosen = best_clique(h.graph, cands.cliques, cands.augmented);

    RoundTrace trace;
    trace.round = round;
    trace.k = cands.k();
    trace.residual_size = residual.size();
    trace.candidates = cands.cliques.size();

    // The clique's color map must be a valid partial coloring of h.
    const auto projected = project(cands.augmented, chosen);
    Coloring local(h.graph.num_vertices());
    for (const auto& pv : projected) {
      if (local.colored(pv.vertex)) throw std::logic_error("clique projects two copies of one vertex");
      local.colors[pv.vertex] = pv.color;
    }
    if (!is_valid(h.graph, local)) throw std::logic_error("clique color map is not a valid partial coloring");

    std::set<Color> used;
    for (const auto& pv : projected) used.insert(pv.color);
    const std::vector<Color> palette(used.begin(), used.end());
    for (const auto& pv : projected) {
      const auto rank = static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), pv.color) -
                                                 palette.begin());
      const Vertex v = h.labels[pv.vertex];
      col.colors[v] = offset + rank;
      trace.chosen.push_back({v, offset + rank});
    }
    offset += palette.size();
    trace.colors_consumed = palette.size();

    if (projected.empty()) {
      if (++stalled >= cfg.stall_rounds) {
        // Color one maximum-saturation residual vertex by Dsatur rules.
        Vertex pick = n;
        std::size_t pick_sat = 0;
        for (Vertex v : residual) {
          std::set<std::size_t> seen;
          g.row(v).for_each([&](std::size_t u) {
            if (col.colored(u)) seen.insert(col[u]);
          });
          if (pick == n || seen.size() > pick_sat ||
              (seen.size() == pick_sat && g.degree(v) > g.degree(pick))) {
            pick = v;
            pick_sat = seen.size();
          }
        }
        std::size_t c = smallest_free_color(g, col, pick);
        if (c >= offset) {
          c = offset++;
          ++trace.colors_consumed;
        }
        col.colors[pick] = c;
        trace.chosen.push_back({pick, c});
        trace.fallback = true;
        stalled = 0;
      }
    } else {
      stalled = 0;
    }

    VertexList next;
    for (Vertex v : residual)
      if (!col.colored(v)) next.push_back(v);
    residual.swap(next);
    result.rounds.push_back(std::move(trace));
  }

  result.placeholder_vertices = residual.size();
  for (Vertex v : residual) col.colors[v] = offset;
  result.coloring = std::move(col);
  return result;
}

}  // namespace gbsc
