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

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbsc/graph.hpp"
#include "gbsc/random.hpp"

namespace gbsc {

/// Group interval scheduling instance: every interval is a task, tasks
/// conflict when their half-open time windows overlap or when they share a
/// group.
struct GroupIntervalInstance {
  struct Interval {
    std::int64_t start;
    std::int64_t end;
    std::size_t group;
    bool operator==(const Interval&) const = default;
  };

  std::vector<Interval> intervals;
  std::size_t max_group_size = 4;

  void validate() const {
    std::map<std::size_t, std::size_t> members;
    for (const auto& iv : intervals) {
      if (!(iv.start < iv.end)) throw std::invalid_argument("interval must satisfy start < end");
      if (++members[iv.group] > max_group_size)
        throw std::invalid_argument("group " + std::to_string(iv.group) + " exceeds the maximum group size");
    }
  }

  bool operator==(const GroupIntervalInstance&) const = default;
};

inline Graph group_interval_graph(const GroupIntervalInstance& inst) {
  const auto& iv = inst.intervals;
  GraphBuilder b(iv.size());
  for (std::size_t a = 0; a < iv.size(); ++a)
    for (std::size_t c = a + 1; c < iv.size(); ++c) {
      const bool overlap = iv[a].start < iv[c].end && iv[c].start < iv[a].end;
      if (overlap || iv[a].group == iv[c].group) b.add_edge(a, c);
    }
  return std::move(b).build();
}

/// Synthetic stand-in for booking data: durations uniform in
/// [1, max_duration], starts uniform in [0, horizon - d), and groups filled
/// sequentially with sizes uniform in {1..K}.
inline GroupIntervalInstance random_group_interval_instance(std::size_t n_intervals, std::size_t max_group_size,
                                                            std::int64_t horizon, std::int64_t max_duration,
                                                            std::uint64_t seed) {
  if (max_group_size < 1) throw std::invalid_argument("group size bound K must be >= 1");
  if (max_duration < 1 || horizon <= max_duration)
    throw std::invalid_argument("need 1 <= max_duration < horizon");
  Rng rng(seed);
  GroupIntervalInstance inst;
  inst.max_group_size = max_group_size;
  std::size_t group = 0;
  std::size_t remaining_in_group = 0;
  for (std::size_t t = 0; t < n_intervals; ++t) {
    if (remaining_in_group == 0) {
      if (t > 0) ++group;
      remaining_in_group = 1 + uniform_index(rng, max_group_size);
    }
    --remaining_in_group;
    const auto d = std::uniform_int_distribution<std::int64_t>(1, max_duration)(rng);
    const auto start = std::uniform_int_distribution<std::int64_t>(0, horizon - d - 1)(rng);
    inst.intervals.push_back({start, start + d, group});
  }
  return inst;
}

/// One line per task: "interval <id> <start> <end> <group>". A leading
/// "K <max group size>" line is written so the file is self-describing.
inline std::string write_gisp(const GroupIntervalInstance& inst) {
  std::ostringstream os;
  os << "K " << inst.max_group_size << '\n';
  for (std::size_t i = 0; i < inst.intervals.size(); ++i) {
    const auto& iv = inst.intervals[i];
    os << "interval " << i << ' ' << iv.start << ' ' << iv.end << ' ' << iv.group << '\n';
  }
  return os.str();
}

inline GroupIntervalInstance read_gisp(std::string_view text) {
  GroupIntervalInstance inst;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "K") {
      if (!(ls >> inst.max_group_size)) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad K");
    } else if (tag == "interval") {
      std::size_t id = 0;
      GroupIntervalInstance::Interval iv{};
      if (!(ls >> id >> iv.start >> iv.end >> iv.group))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed interval");
      if (id != inst.intervals.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": interval ids must be consecutive");
      inst.intervals.push_back(iv);
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  inst.validate();
  return inst;
}

}  // namespace gbsc
