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

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbsc/graph.hpp"

namespace gbsc {

/// Parses DIMACS .col text: "c" comments, one "p edge <n> <m>" header, and
/// "e <u> <v>" lines with 1-based endpoints.
inline Graph read_dimacs(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("dimacs line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      if (have_header) fail("duplicate problem line");
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col")) fail("malformed problem line");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before problem line");
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 1 || v < 1) fail("vertex indices are 1-based");
      if (static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n) fail("vertex index exceeds n");
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw std::invalid_argument("dimacs: missing problem line");
  if (edges.size() != m)
    throw std::invalid_argument("dimacs: header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  return Graph(n, edges);
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

}  // namespace gbsc
