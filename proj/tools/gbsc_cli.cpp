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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbsc/bench.hpp"
#include "gbsc/coloring.hpp"
#include "gbsc/dimacs.hpp"
#include "gbsc/exact.hpp"
#include "gbsc/gbs_math.hpp"
#include "gbsc/gbsc.hpp"
#include "gbsc/gisp.hpp"
#include "gbsc/hafnian.hpp"
#include "gbsc/sampler.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Whitespace-separated rows, one matrix row per nonblank line.
gbsc::SymMatrix read_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    for (double x; ls >> x;) row.push_back(x);
    if (!ls.eof()) throw std::invalid_argument("matrix: non-numeric entry");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return gbsc::SymMatrix(rows);
}

void print_coloring(const gbsc::Coloring& c) {
  for (std::size_t v = 0; v < c.size(); ++v) std::cout << v << ' ' << c[v] << '\n';
  std::cout << "palette " << c.palette_size() << '\n';
}

std::size_t env_workers(std::size_t fallback) {
  if (const char* w = std::getenv("GBSC_WORKERS"); w && *w) return std::stoul(w);
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph coloring with a simulated Gaussian boson sampler"};
  app.require_subcommand(1);

  std::string haf_input = "-";
  std::string haf_backend = "recursive";
  auto* haf = app.add_subcommand("haf", "Hafnian of a symmetric matrix");
  haf->add_option("input", haf_input, "matrix file, '-' for stdin");
  haf->add_option("--backend", haf_backend, "recursive | power-trace | exact")
      ->check(CLI::IsMember({"recursive", "power-trace", "exact"}));

  std::string enc_input;
  double enc_nbar = 2.0;
  auto* enc = app.add_subcommand("encode", "Takagi decomposition and squeezing for a graph");
  enc->add_option("--input", enc_input, "DIMACS file")->required();
  enc->add_option("--nbar", enc_nbar, "mean photon number");

  std::string smp_input, smp_mode = "mcmc";
  std::size_t smp_nbar = 2, smp_samples = 10;
  std::uint64_t smp_seed = 0;
  auto* smp = app.add_subcommand("sample", "Draw click patterns from an encoded graph");
  smp->add_option("--input", smp_input, "DIMACS file")->required();
  smp->add_option("--mode", smp_mode, "enumerate | mcmc | uniform");
  smp->add_option("--nbar", smp_nbar, "mean photon number");
  smp->add_option("--samples", smp_samples, "number of samples");
  smp->add_option("--seed", smp_seed, "seed");

  std::string col_input, col_method = "dsatur";
  std::uint64_t col_seed = 0;
  bool col_trace = false;
  auto* col = app.add_subcommand("color", "Color a graph");
  col->add_option("--input", col_input, "DIMACS file")->required();
  col->add_option("--method", col_method, "dsatur | rlf | sli | gbsc")
      ->check(CLI::IsMember({"dsatur", "rlf", "sli", "gbsc"}));
  col->add_option("--seed", col_seed, "seed for gbsc");
  col->add_flag("--trace", col_trace, "print one line per gbsc round to stderr");

  std::string ex_input;
  double ex_limit = 300.0;
  auto* ex = app.add_subcommand("exact", "Exact chromatic number");
  ex->add_option("--input", ex_input, "DIMACS file")->required();
  ex->add_option("--time-limit", ex_limit, "seconds");

  std::string gen_kind = "er";
  std::size_t gen_n = 10;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_gisp_out;
  auto* gen = app.add_subcommand("generate", "Write a random instance as DIMACS to stdout");
  gen->add_option("--kind", gen_kind, "er | gisp")->check(CLI::IsMember({"er", "gisp"}));
  gen->add_option("-n", gen_n, "vertices or intervals");
  gen->add_option("-p", gen_p, "edge probability (er)");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--gisp-out", gen_gisp_out, "also write the interval instance here");

  std::string b_config, b_out = "bench_out";
  std::size_t b_workers = 0;
  bool b_resume = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--config", b_config, "key = value config file")->required();
  bench->add_option("--out", b_out, "output directory");
  bench->add_option("--workers", b_workers, "worker threads (GBSC_WORKERS overrides)");
  bench->add_flag("--resume", b_resume, "skip instances already in records.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*haf) {
      const auto m = read_matrix(read_input(haf_input));
      if (haf_backend == "exact")
        std::cout << gbsc::to_string(gbsc::hafnian_exact(m)) << '\n';
      else
        std::cout << std::setprecision(17)
                  << gbsc::hafnian(m, haf_backend == "recursive" ? gbsc::HafnianBackend::kRecursive
                                                                 : gbsc::HafnianBackend::kPowerTrace)
                  << '\n';
      return 0;
    }
    if (*enc) {
      const auto g = gbsc::read_dimacs(read_input(enc_input));
      const auto e = gbsc::encode_graph(g, enc_nbar);
      std::cout << std::setprecision(12) << "scaling " << e.scaling << '\n';
      std::cout << "lambda";
      for (double l : e.decomposition.lambdas) std::cout << ' ' << l;
      std::cout << "\nsqueezing";
      for (double r : e.squeezing) std::cout << ' ' << r;
      std::cout << '\n';
      return 0;
    }
    if (*smp) {
      const auto g = gbsc::read_dimacs(read_input(smp_input));
      gbsc::SamplerConfig cfg;
      cfg.mode = gbsc::parse_sampler_mode(smp_mode);
      cfg.mean_photons = smp_nbar;
      cfg.n_samples = smp_samples;
      cfg.seed = smp_seed;
      for (const auto& s : gbsc::sample(g, cfg)) {
        for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
        std::cout << '\n';
      }
      return 0;
    }
    if (*col) {
      const auto g = gbsc::read_dimacs(read_input(col_input));
      gbsc::Coloring c;
      if (col_method == "dsatur") {
        c = gbsc::dsatur(g);
      } else if (col_method == "rlf") {
        c = gbsc::rlf(g);
      } else if (col_method == "sli") {
        c = gbsc::sli(g);
      } else {
        gbsc::GbscConfig cfg;
        cfg.seed = col_seed;
        auto r = gbsc::gbsc_color(g, cfg);
        if (col_trace)
          for (const auto& t : r.rounds) std::cerr << t.to_string() << '\n';
        c = std::move(r.coloring);
      }
      print_coloring(c);
      return 0;
    }
    if (*ex) {
      const auto g = gbsc::read_dimacs(read_input(ex_input));
      const auto r = gbsc::chromatic_exact(g, std::chrono::duration<double>(ex_limit));
      std::cout << "chi " << r.chi << (r.timed_out ? " (timeout, upper bound)" : "") << '\n';
      std::cout << "lower_bound " << r.lower_bound << '\n';
      std::cout << "nodes " << r.nodes_explored << '\n';
      std::cout << "seconds " << r.seconds << '\n';
      print_coloring(r.witness);
      return 0;
    }
    if (*gen) {
      if (gen_kind == "er") {
        std::cout << gbsc::write_dimacs(gbsc::erdos_renyi(gen_n, gen_p, gen_seed));
      } else {
        const auto inst = gbsc::random_group_interval_instance(gen_n, 4, 48, 12, gen_seed);
        if (!gen_gisp_out.empty()) std::ofstream(gen_gisp_out) << gbsc::write_gisp(inst);
        std::cout << gbsc::write_dimacs(gbsc::group_interval_graph(inst));
      }
      return 0;
    }
    if (*bench) {
      namespace gb = gbsc::bench;
      auto cfg = gb::parse_config(read_input(b_config));
      if (b_workers) cfg.workers = b_workers;
      cfg.workers = env_workers(cfg.workers);
      const std::filesystem::path out(b_out);
      const auto instances = gb::generate_suite(cfg);
      gb::write_suite(instances, out / "instances");
      gb::RunOptions opts;
      opts.workers = cfg.workers;
      opts.records_path = out / "records.csv";
      opts.resume = b_resume;
      opts.on_record = [](const gb::ExperimentRecord& r) { std::cerr << "done " << r.id << " chi=" << r.chi << '\n'; };
      const auto records = gb::run_suite(instances, cfg, opts);
      const auto table = gb::excess_table(records, cfg.methods);
      std::ofstream(out / "excess_table.csv") << table.to_csv();
      std::ofstream(out / "excess_table.md") << table.to_markdown();
      if (std::find(cfg.methods.begin(), cfg.methods.end(), "gbsc") != cfg.methods.end()) {
        const auto wdl = gb::wdl_table(table);
        std::ofstream(out / "wdl_table.csv") << wdl.to_csv();
        std::ofstream(out / "wdl_table.md") << wdl.to_markdown();
        std::cout << wdl.to_markdown() << '\n';
      }
      std::cout << table.to_markdown();
      int bad = 0;
      for (const auto& r : records)
        if (!r.consistent()) {
          std::cerr << "invariant violated on " << r.id << '\n';
          ++bad;
        }
      return bad ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
