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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gbsc/coloring.hpp"
#include "gbsc/dimacs.hpp"
#include "gbsc/exact.hpp"
#include "gbsc/gbsc.hpp"
#include "gbsc/gisp.hpp"
#include "gbsc/graph.hpp"
#include "gbsc/random.hpp"

namespace gbsc::bench {

inline const std::vector<std::string> kAllMethods = {"sli", "rlf", "dsatur", "gbsc"};

/// Parsed from "key = value" lines; '#' starts a comment.
struct ExperimentConfig {
  enum class Source { kErdosRenyi, kGroupInterval };
  Source source = Source::kErdosRenyi;
  /// Edge-probability intervals, one per group.
  std::vector<std::pair<double, double>> groups;
  std::vector<std::size_t> sizes;
  std::size_t instances_per_size = 13;
  std::vector<std::string> methods = kAllMethods;
  std::uint64_t seed = 1;
  double exact_time_limit = 300.0;
  std::size_t workers = 1;

  std::size_t gisp_max_group_size = 4;
  std::int64_t gisp_horizon = 48;
  std::int64_t gisp_max_duration = 12;

  std::size_t gbsc_samples_per_round = 6;
  SamplerMode gbsc_sampler = SamplerMode::kMcmc;
  std::optional<std::size_t> gbsc_burn_in;
  std::optional<std::size_t> gbsc_thinning;
  std::size_t gbsc_stall_rounds = 1;

  void validate() const {
    if (sizes.empty()) throw std::invalid_argument("config: sizes must not be empty");
    if (methods.empty()) throw std::invalid_argument("config: methods must not be empty");
    for (const auto& m : methods)
      if (std::find(kAllMethods.begin(), kAllMethods.end(), m) == kAllMethods.end())
        throw std::invalid_argument("config: unknown method '" + m + "'");
    if (source == Source::kErdosRenyi && groups.empty()) throw std::invalid_argument("config: groups must not be empty");
    for (const auto& [lo, hi] : groups)
      if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) throw std::invalid_argument("config: bad probability interval");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
  }

  GbscConfig gbsc_config(std::uint64_t seed_value) const {
    GbscConfig c;
    c.sampler.mode = gbsc_sampler;
    c.sampler.burn_in = gbsc_burn_in;
    c.sampler.thinning = gbsc_thinning;
    c.samples_per_round = gbsc_samples_per_round;
    c.stall_rounds = gbsc_stall_rounds;
    c.seed = seed_value;
    return c;
  }
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::string format_double(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "source") {
        if (value == "er")
          cfg.source = ExperimentConfig::Source::kErdosRenyi;
        else if (value == "gisp")
          cfg.source = ExperimentConfig::Source::kGroupInterval;
        else
          throw std::invalid_argument("unknown source '" + value + "'");
      } else if (key == "groups") {
        cfg.groups.clear();
        for (const auto& g : detail::split(value, ',')) {
          const auto dash = g.find('-');
          if (dash == std::string::npos) throw std::invalid_argument("group interval needs lo-hi");
          cfg.groups.emplace_back(std::stod(g.substr(0, dash)), std::stod(g.substr(dash + 1)));
        }
      } else if (key == "sizes") {
        cfg.sizes.clear();
        for (const auto& s : detail::split(value, ',')) cfg.sizes.push_back(std::stoul(s));
      } else if (key == "instances") {
        cfg.instances_per_size = std::stoul(value);
      } else if (key == "methods") {
        cfg.methods = detail::split(value, ',');
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "exact_time_limit") {
        cfg.exact_time_limit = std::stod(value);
      } else if (key == "workers") {
        cfg.workers = std::stoul(value);
      } else if (key == "gisp_max_group_size") {
        cfg.gisp_max_group_size = std::stoul(value);
      } else if (key == "gisp_horizon") {
        cfg.gisp_horizon = std::stoll(value);
      } else if (key == "gisp_max_duration") {
        cfg.gisp_max_duration = std::stoll(value);
      } else if (key == "gbsc_samples_per_round") {
        cfg.gbsc_samples_per_round = std::stoul(value);
      } else if (key == "gbsc_sampler") {
        cfg.gbsc_sampler = parse_sampler_mode(value);
      } else if (key == "gbsc_burn_in") {
        cfg.gbsc_burn_in = std::stoul(value);
      } else if (key == "gbsc_thinning") {
        cfg.gbsc_thinning = std::stoul(value);
      } else if (key == "gbsc_stall_rounds") {
        cfg.gbsc_stall_rounds = std::stoul(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

struct Instance {
  std::string id;
  std::string group;
  std::size_t group_index = 0;
  std::size_t n = 0;
  /// Edge probability for ER instances, density for GISP instances.
  double parameter = 0.0;
  std::uint64_t seed = 0;
  Graph graph;
  std::optional<GroupIntervalInstance> gisp;
};

/// ER mode: per group, per size, `instances_per_size` graphs with p drawn
/// uniformly from the group's interval. GISP mode: per size, random
/// instances split into four density quartiles. Deterministic per seed.
inline std::vector<Instance> generate_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Instance> out;
  std::uint64_t stream = 0;
  if (cfg.source == ExperimentConfig::Source::kErdosRenyi) {
    for (std::size_t gi = 0; gi < cfg.groups.size(); ++gi) {
      const auto [lo, hi] = cfg.groups[gi];
      for (std::size_t n : cfg.sizes)
        for (std::size_t i = 0; i < cfg.instances_per_size; ++i) {
          Instance inst;
          inst.seed = split_seed(cfg.seed, stream++);
          Rng rng(inst.seed);
          inst.parameter = lo + (hi - lo) * uniform_unit(rng);
          inst.graph = erdos_renyi(n, inst.parameter, split_seed(inst.seed, 1));
          inst.n = n;
          inst.group_index = gi;
          inst.group = "Group " + std::to_string(gi + 1);
          char id[64];
          std::snprintf(id, sizeof(id), "g%zu-n%zu-%03zu", gi + 1, n, i);
          inst.id = id;
          out.push_back(std::move(inst));
        }
    }
    return out;
  }

  for (std::size_t n : cfg.sizes)
    for (std::size_t i = 0; i < cfg.instances_per_size; ++i) {
      Instance inst;
      inst.seed = split_seed(cfg.seed, stream++);
      inst.gisp = random_group_interval_instance(n, cfg.gisp_max_group_size, cfg.gisp_horizon,
                                                 cfg.gisp_max_duration, inst.seed);
      inst.graph = group_interval_graph(*inst.gisp);
      inst.n = n;
      inst.parameter = n >= 2 ? density(inst.graph) : 0.0;
      char id[64];
      std::snprintf(id, sizeof(id), "gisp-n%zu-%03zu", n, i);
      inst.id = id;
      out.push_back(std::move(inst));
    }
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(out[a].parameter, out[a].id) < std::tie(out[b].parameter, out[b].id);
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t q = rank * 4 / order.size();
    out[order[rank]].group_index = q;
    out[order[rank]].group = "Quartile " + std::to_string(q + 1);
  }
  return out;
}

/// Writes <dir>/<id>.col (and <id>.gisp for interval instances).
inline void write_suite(const std::vector<Instance>& instances, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& inst : instances) {
    std::ofstream(dir / (inst.id + ".col"), std::ios::binary) << write_dimacs(inst.graph);
    if (inst.gisp) std::ofstream(dir / (inst.id + ".gisp"), std::ios::binary) << write_gisp(*inst.gisp);
  }
}

struct MethodResult {
  std::string method;
  std::size_t palette = 0;
  long excess = 0;
  bool valid = false;
  double seconds = 0.0;
};

struct ExperimentRecord {
  std::string id;
  std::string group;
  std::size_t group_index = 0;
  std::size_t n = 0;
  double parameter = 0.0;
  std::uint64_t seed = 0;
  std::size_t chi = 0;
  bool timed_out = false;
  double exact_seconds = 0.0;
  std::vector<MethodResult> methods;

  const MethodResult* method(const std::string& name) const {
    for (const auto& m : methods)
      if (m.method == name) return &m;
    return nullptr;
  }

  /// Every coloring valid, and no palette below chi on exact instances.
  bool consistent() const {
    for (const auto& m : methods) {
      if (!m.valid) return false;
      if (!timed_out && m.palette < chi) return false;
    }
    return true;
  }
};

inline Coloring run_method(const std::string& method, const Graph& g, const ExperimentConfig& cfg,
                           std::uint64_t seed) {
  if (method == "dsatur") return dsatur(g);
  if (method == "rlf") return rlf(g);
  if (method == "sli") return sli(g);
  if (method == "gbsc") return gbsc_color(g, cfg.gbsc_config(split_seed(seed, 0x6b5c))).coloring;
  throw std::invalid_argument("unknown method '" + method + "'");
}

inline ExperimentRecord run_instance(const Instance& inst, const ExperimentConfig& cfg) {
  ExperimentRecord r;
  r.id = inst.id;
  r.group = inst.group;
  r.group_index = inst.group_index;
  r.n = inst.n;
  r.parameter = inst.parameter;
  r.seed = inst.seed;
  const ExactResult exact = chromatic_exact(inst.graph, std::chrono::duration<double>(cfg.exact_time_limit));
  r.chi = exact.chi;
  r.timed_out = exact.timed_out;
  r.exact_seconds = exact.seconds;
  for (const auto& m : cfg.methods) {
    MethodResult mr;
    mr.method = m;
    const auto t0 = std::chrono::steady_clock::now();
    const Coloring col = run_method(m, inst.graph, cfg, inst.seed);
    mr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    mr.valid = col.total() && is_valid(inst.graph, col);
    mr.palette = col.palette_size();
    mr.excess = static_cast<long>(mr.palette) - static_cast<long>(r.chi);
    r.methods.push_back(mr);
  }
  return r;
}

inline std::string record_header(const std::vector<std::string>& methods) {
  std::string h = "id,group,group_index,n,parameter,seed,chi,timed_out,exact_seconds";
  for (const auto& m : methods) h += "," + m + "_palette," + m + "_excess," + m + "_valid," + m + "_seconds";
  return h;
}

inline std::string record_line(const ExperimentRecord& r) {
  std::ostringstream os;
  os << r.id << ',' << r.group << ',' << r.group_index << ',' << r.n << ',' << detail::format_double(r.parameter, 6)
     << ',' << r.seed << ',' << r.chi << ',' << (r.timed_out ? 1 : 0) << ',' << detail::format_double(r.exact_seconds, 3);
  for (const auto& m : r.methods)
    os << ',' << m.palette << ',' << m.excess << ',' << (m.valid ? 1 : 0) << ',' << detail::format_double(m.seconds, 3);
  return os.str();
}

inline ExperimentRecord parse_record_line(const std::string& line, const std::vector<std::string>& methods) {
  const auto f = detail::split(line, ',');
  if (f.size() != 9 + 4 * methods.size()) throw std::invalid_argument("record line has wrong field count");
  ExperimentRecord r;
  r.id = f[0];
  r.group = f[1];
  r.group_index = std::stoul(f[2]);
  r.n = std::stoul(f[3]);
  r.parameter = std::stod(f[4]);
  r.seed = std::stoull(f[5]);
  r.chi = std::stoul(f[6]);
  r.timed_out = f[7] == "1";
  r.exact_seconds = std::stod(f[8]);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    MethodResult m;
    m.method = methods[i];
    m.palette = std::stoul(f[9 + 4 * i]);
    m.excess = std::stol(f[10 + 4 * i]);
    m.valid = f[11 + 4 * i] == "1";
    m.seconds = std::stod(f[12 + 4 * i]);
    r.methods.push_back(m);
  }
  return r;
}

struct RunOptions {
  std::size_t workers = 1;
  /// Records are appended here as they complete, if set.
  std::optional<std::filesystem::path> records_path;
  /// Skip instances whose id already appears in records_path.
  bool resume = false;
  std::function<void(const ExperimentRecord&)> on_record;
};

/// Solves every instance on a bounded worker pool. Returned records are in
/// instance order regardless of completion order.
inline std::vector<ExperimentRecord> run_suite(const std::vector<Instance>& instances, const ExperimentConfig& cfg,
                                               const RunOptions& opts = {}) {
  std::map<std::string, ExperimentRecord> done;
  if (opts.resume && opts.records_path && std::filesystem::exists(*opts.records_path)) {
    std::ifstream in(*opts.records_path);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        header = false;
        continue;
      }
      if (detail::trim(line).empty()) continue;
      auto r = parse_record_line(line, cfg.methods);
      done.emplace(r.id, std::move(r));
    }
  }
  std::ofstream out;
  std::mutex out_mutex;
  if (opts.records_path) {
    const bool append = opts.resume && std::filesystem::exists(*opts.records_path);
    out.open(*opts.records_path, append ? std::ios::app : std::ios::trunc);
    if (!append) out << record_header(cfg.methods) << '\n' << std::flush;
  }

  std::vector<std::optional<ExperimentRecord>> results(instances.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (auto it = done.find(instances[i].id); it != done.end())
      results[i] = it->second;
    else
      todo.push_back(i);
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= todo.size()) return;
      try {
        ExperimentRecord r = run_instance(instances[todo[t]], cfg);
        std::lock_guard lock(out_mutex);
        if (out.is_open()) out << record_line(r) << '\n' << std::flush;
        if (opts.on_record) opts.on_record(r);
        results[todo[t]] = std::move(r);
      } catch (...) {
        std::lock_guard lock(out_mutex);
        if (!failure) failure = std::current_exception();
        next = todo.size();
        return;
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.workers, todo.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRecord> records;
  for (auto& r : results) records.push_back(std::move(*r));
  return records;
}

/// One row per (group, chi) plus one average row per group.
struct ExcessRow {
  std::string group;
  std::size_t group_index = 0;
  std::optional<std::size_t> chi;  // empty on the group average row
  std::size_t nsamples = 0;
  std::size_t timeouts = 0;
  std::vector<double> mean_excess;  // per method, table column order
};

struct ExcessTable {
  std::vector<std::string> methods;
  std::vector<ExcessRow> rows;

  std::vector<bool> best_cells(const ExcessRow& row) const {
    std::vector<bool> best(methods.size(), false);
    if (row.nsamples == 0) return best;
    const double lo = *std::min_element(row.mean_excess.begin(), row.mean_excess.end());
    for (std::size_t i = 0; i < methods.size(); ++i) best[i] = std::abs(row.mean_excess[i] - lo) <= 1e-12;
    return best;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "group,chi,nsamples,timeouts";
    for (const auto& m : methods) os << ',' << m;
    os << ",best\n";
    for (const auto& r : rows) {
      os << r.group << ',' << (r.chi ? std::to_string(*r.chi) : "avg") << ',' << r.nsamples << ',' << r.timeouts;
      for (double x : r.mean_excess) os << ',' << detail::format_double(x, 4);
      const auto best = best_cells(r);
      std::string names;
      for (std::size_t i = 0; i < methods.size(); ++i)
        if (best[i]) names += (names.empty() ? "" : ";") + methods[i];
      os << ',' << names << '\n';
    }
    return os.str();
  }

  std::string to_markdown() const {
    std::ostringstream os;
    os << "| group | chi | nsamples | timeouts |";
    for (const auto& m : methods) os << ' ' << m << " |";
    os << "\n|---|---|---|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : rows) {
      os << "| " << r.group << " | " << (r.chi ? std::to_string(*r.chi) : "Average") << " | " << r.nsamples << " | "
         << r.timeouts << " |";
      const auto best = best_cells(r);
      for (std::size_t i = 0; i < methods.size(); ++i) {
        const std::string cell = detail::format_double(r.mean_excess[i], 2);
        os << ' ' << (best[i] ? "**" + cell + "**" : cell) << " |";
      }
      os << '\n';
    }
    return os.str();
  }
};

/// Mean excess per (group, chi) over exactly solved instances. Timed-out
/// instances only count in the group's timeouts column.
inline ExcessTable excess_table(const std::vector<ExperimentRecord>& records, const std::vector<std::string>& methods) {
  if (records.empty()) throw std::invalid_argument("excess_table needs at least one record");
  ExcessTable t;
  t.methods = methods;
  std::map<std::size_t, std::string> group_names;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const ExperimentRecord*>> cells;
  std::map<std::size_t, std::vector<const ExperimentRecord*>> groups;
  std::map<std::size_t, std::size_t> timeouts;
  for (const auto& r : records) {
    group_names[r.group_index] = r.group;
    if (r.timed_out) {
      ++timeouts[r.group_index];
      continue;
    }
    cells[{r.group_index, r.chi}].push_back(&r);
    groups[r.group_index].push_back(&r);
  }
  auto means = [&](const std::vector<const ExperimentRecord*>& rs) {
    std::vector<double> out(methods.size(), 0.0);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      for (const auto* r : rs) {
        const MethodResult* m = r->method(methods[i]);
        if (!m) throw std::invalid_argument("record " + r->id + " lacks method " + methods[i]);
        out[i] += static_cast<double>(m->excess);
      }
      if (!rs.empty()) out[i] /= static_cast<double>(rs.size());
    }
    return out;
  };
  for (const auto& [gi, name] : group_names) {
    for (const auto& [key, rs] : cells)
      if (key.first == gi) t.rows.push_back({name, gi, key.second, rs.size(), 0, means(rs)});
    const auto& all = groups[gi];
    t.rows.push_back({name, gi, std::nullopt, all.size(), timeouts[gi], means(all)});
  }
  return t;
}

struct WdlCell {
  std::size_t win = 0;
  std::size_t draw = 0;
  std::size_t loss = 0;
  std::string to_string() const {
    return std::to_string(win) + "-" + std::to_string(draw) + "-" + std::to_string(loss);
  }
};

struct WdlTable {
  std::string reference;
  std::vector<std::string> baselines;
  /// Group rows followed by an "Overall" row.
  std::vector<std::pair<std::string, std::vector<WdlCell>>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    os << "group";
    for (const auto& b : baselines) os << ',' << reference << "_vs_" << b;
    os << '\n';
    for (const auto& [name, cells] : rows) {
      os << name;
      for (const auto& c : cells) os << ',' << c.to_string();
      os << '\n';
    }
    return os.str();
  }

  std::string to_markdown() const {
    std::ostringstream os;
    os << "| group |";
    for (const auto& b : baselines) os << ' ' << reference << " vs " << b << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < baselines.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& [name, cells] : rows) {
      os << "| " << name << " |";
      for (const auto& c : cells) os << ' ' << c.to_string() << " |";
      os << '\n';
    }
    return os.str();
  }
};

/// Per-row (group, chi) comparison of the reference method's mean excess
/// against each baseline. Average rows are not compared.
inline WdlTable wdl_table(const ExcessTable& table, const std::string& reference = "gbsc") {
  const auto ref = std::find(table.methods.begin(), table.methods.end(), reference);
  if (ref == table.methods.end()) throw std::invalid_argument("reference method missing from table");
  const std::size_t ri = static_cast<std::size_t>(ref - table.methods.begin());
  WdlTable w;
  w.reference = reference;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < table.methods.size(); ++i)
    if (i != ri) {
      w.baselines.push_back(table.methods[i]);
      cols.push_back(i);
    }
  std::vector<WdlCell> overall(cols.size());
  std::map<std::size_t, std::pair<std::string, std::vector<WdlCell>>> by_group;
  for (const auto& row : table.rows) {
    auto& [name, cells] = by_group[row.group_index];
    if (cells.empty()) {
      name = row.group;
      cells.resize(cols.size());
    }
    if (!row.chi) continue;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const double a = row.mean_excess[ri];
      const double b = row.mean_excess[cols[c]];
      WdlCell& cell = cells[c];
      if (std::abs(a - b) <= 1e-12)
        ++cell.draw;
      else if (a < b)
        ++cell.win;
      else
        ++cell.loss;
    }
  }
  for (auto& [_, entry] : by_group) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      overall[c].win += entry.second[c].win;
      overall[c].draw += entry.second[c].draw;
      overall[c].loss += entry.second[c].loss;
    }
    w.rows.push_back(std::move(entry));
  }
  w.rows.emplace_back("Overall", overall);
  return w;
}

/// Mean excess of one method over exactly solved records, optionally
/// restricted to some group indices.
inline double mean_excess(const std::vector<ExperimentRecord>& records, const std::string& method,
                          const std::set<std::size_t>& groups = {}) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& r : records) {
    if (r.timed_out || (!groups.empty() && !groups.contains(r.group_index))) continue;
    const MethodResult* m = r.method(method);
    if (!m) continue;
    total += static_cast<double>(m->excess);
    ++count;
  }
  return count ? total / static_cast<double>(count) : 0.0;
}

}  // namespace gbsc::bench
