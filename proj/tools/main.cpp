// Copyright 2026 The hetsearch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hetsearch command-line tool.
//
// Exit codes: 0 success (including queries without answers), 1 I/O or other
// runtime error, 2 input parse error, 3 invalid scoring weights. Usage errors
// keep CLI11's own codes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetsearch/answer_io.hpp"
#include "hetsearch/config.hpp"
#include "hetsearch/error.hpp"
#include "hetsearch/ingest.hpp"
#include "hetsearch/search.hpp"
#include "hetsearch/store.hpp"
#include "hetsearch/syngen.hpp"

namespace hetsearch::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitWeights = 3;

class WeightsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Config read_config(const std::string& path) {
  return path.empty() ? Config{} : load_config(path);
}

// --- register ---------------------------------------------------------------

struct RegisterArgs {
  std::string input;
  std::string format;
  std::string mode;
  std::string graph;
  std::string config;
  std::optional<double> tau;
};

int cmd_register(const RegisterArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Config config = read_config(a.config);
  RegistrationConfig rc = make_registration_config(config);
  if (!a.mode.empty()) {
    const auto mode = parse_load_mode(a.mode);
    if (!mode) throw std::invalid_argument("unknown mode '" + a.mode + "'");
    rc.mode = *mode;
  }
  if (a.tau) rc.tau = *a.tau;
  std::optional<SourceFormat> format;
  if (!a.format.empty()) {
    format = parse_source_format(a.format);
    if (!format) throw std::invalid_argument("unknown format '" + a.format + "'");
  }

  IntegratedGraph g = std::filesystem::exists(a.graph) ? load(a.graph, make_tokenizer(config))
                                                         : IntegratedGraph(make_tokenizer(config));
  const RegistrationReport r = register_file(g, a.input, format, rc);
  persist(g, a.graph);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  std::printf("registered %s as dataset %zu (%s)\n", a.input.c_str(),
              static_cast<std::size_t>(r.dataset.value),
              std::string(to_string(r.mode_used)).c_str());
  std::printf("nodes +%zu edges +%zu entities +%zu similar +%zu (total nodes %zu, edges %zu) in %.1f ms\n",
              r.nodes_added, r.edges_added, r.entities_added, r.similar_edges, g.graph.node_count(),
              g.graph.edge_count(), elapsed_ms(start));
  return kExitOk;
}

// --- query ------------------------------------------------------------------

struct QueryArgs {
  std::string graph;
  std::string keywords;
  std::string config;
  std::size_t k = 10;
  long long timeout_ms = kDefaultTimeout.count();
  double alpha = ScoreParams{}.alpha;
  double beta = ScoreParams{}.beta;
  std::string format = "text";
  bool repl = false;
};

void run_query(const IntegratedGraph& g, const QueryArgs& a, const std::string& keywords) {
  Query q;
  q.keywords = split_words(keywords);
  q.k = a.k;
  q.params.alpha = a.alpha;
  q.params.beta = a.beta;
  if (a.timeout_ms > 0) q.timeout = std::chrono::milliseconds(a.timeout_ms);
  else q.timeout.reset();
  if (q.keywords.empty()) {
    std::cerr << "no keywords\n";
    return;
  }

  const SearchResult r = gam_search(g, q);
  for (const auto& d : r.diagnostics) std::cerr << d << "\n";
  if (a.format == "json") {
    std::cout << answers_to_json_lines(g.graph, r.answers, q.keywords);
  } else if (a.format == "dot") {
    std::cout << answers_to_dot(g.graph, r.answers);
  } else {
    std::cout << answers_to_text(g.graph, r.answers, q.keywords);
  }
  std::cout.flush();
  std::fprintf(stderr,
               "answers=%zu found=%zu explored=%zu time_first_ms=%.3f time_total_ms=%.3f%s\n",
               r.answers.size(), r.stats.answers_found, r.stats.trees_explored,
               r.stats.time_first_ms, r.stats.time_total_ms, r.stats.timed_out ? " timed_out" : "");
}

int cmd_query(const QueryArgs& a) {
  ScoreParams params{a.alpha, a.beta};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw WeightsError(e.what());
  }
  const Config config = read_config(a.config);
  const IntegratedGraph g = load(a.graph, make_tokenizer(config));
  if (!a.repl) {
    run_query(g, a, a.keywords);
    return kExitOk;
  }
  // One query per line; blank lines are skipped.
  for (std::string line; std::getline(std::cin, line);) {
    if (split_words(line).empty()) continue;
    if (line == "quit" || line == "exit") break;
    run_query(g, a, line);
  }
  return kExitOk;
}

// --- generate ---------------------------------------------------------------

struct ShapeArgs {
  std::size_t n = 10;
  std::size_t branches = 3;
  std::size_t length = 10;
  std::size_t m0 = 2;
  std::uint64_t seed = 1;
  std::optional<std::size_t> distance;
};

IntegratedGraph make_shape(const std::string& shape, const ShapeArgs& a, std::size_t size) {
  if (shape == "line") return syngen::line(size);
  if (shape == "chain") return syngen::chain(size);
  if (shape == "star") return syngen::star(size, a.length);
  return syngen::barabasi_albert(size, a.m0, a.seed);
}

int cmd_generate(const std::string& shape, const ShapeArgs& a, const std::string& out) {
  IntegratedGraph g = make_shape(shape, a, shape == "star" ? a.branches : a.n);
  if (a.distance) {
    if (!syngen::place_keywords_at_distance(g, *a.distance)) {
      throw std::invalid_argument("no node pair at distance " + std::to_string(*a.distance));
    }
  }
  persist(g, out);
  std::printf("%s: %zu nodes, %zu edges -> %s\n", shape.c_str(), g.graph.node_count(),
              g.graph.edge_count(), out.c_str());
  return kExitOk;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  ShapeArgs shape;
  std::size_t from = 2;
  std::size_t to = 10;
  std::string distances = "1..21";
  long long timeout_ms = kDefaultTimeout.count();
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(s);
      return {v, v};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + s + "', expected A..B");
  }
}

void bench_row(std::size_t param, const IntegratedGraph& g, const std::vector<std::string>& keywords,
               long long timeout_ms) {
  Query q;
  q.keywords = keywords;
  q.k = kUnlimited;
  if (timeout_ms > 0) q.timeout = std::chrono::milliseconds(timeout_ms);
  else q.timeout.reset();
  const SearchResult r = gam_search(g, q);
  std::printf("%zu,%.3f,%.3f,%zu,%zu\n", param, r.stats.time_first_ms, r.stats.time_total_ms,
              r.stats.answers_found, r.stats.trees_explored);
  std::fflush(stdout);
}

int cmd_bench(const std::string& shape, const BenchArgs& a) {
  std::printf("param,time_first_ms,time_total_ms,answers,trees_explored\n");
  if (shape == "ba") {
    const auto [lo, hi] = parse_range(a.distances);
    for (std::size_t d = lo; d <= hi; ++d) {
      IntegratedGraph g = syngen::barabasi_albert(a.shape.n, a.shape.m0, a.shape.seed);
      if (!syngen::place_keywords_at_distance(g, d)) {
        std::cerr << "no node pair at distance " << d << "\n";
        continue;
      }
      bench_row(d, g, {syngen::kStartLabel, syngen::kEndLabel}, a.timeout_ms);
    }
    return kExitOk;
  }
  for (std::size_t p = a.from; p <= a.to; ++p) {
    const IntegratedGraph g = make_shape(shape, a.shape, p);
    if (shape == "star") bench_row(p, g, {"kw1", "kw2"}, a.timeout_ms);
    else bench_row(p, g, {syngen::kStartLabel, syngen::kEndLabel}, a.timeout_ms);
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Keyword search over integrated heterogeneous datasets"};
  app.require_subcommand(1);
  std::function<int()> action;

  RegisterArgs reg;
  auto* r = app.add_subcommand("register", "Add a dataset to a graph file (created when missing)");
  r->add_option("--input", reg.input, "Dataset file")->required();
  r->add_option("--format", reg.format, "json, csv, ntriples, text or html (default: from extension)");
  r->add_option("--mode", reg.mode, "per-instance, per-type or per-value");
  r->add_option("--graph", reg.graph, "Graph file")->required();
  r->add_option("--config", reg.config, "Registration config file");
  r->add_option("--tau", reg.tau, "Similarity threshold in (0, 1]");
  r->callback([&] { action = [&] { return cmd_register(reg); }; });

  QueryArgs qa;
  auto* q = app.add_subcommand("query", "Search a graph file");
  q->add_option("--graph", qa.graph, "Graph file")->required();
  auto* kw = q->add_option("--keywords", qa.keywords, "Space-separated keywords");
  q->add_option("--k", qa.k, "Number of answers")->capture_default_str();
  q->add_option("--timeout-ms", qa.timeout_ms, "Search time budget, 0 for none")->capture_default_str();
  q->add_option("--alpha", qa.alpha, "Matching score weight")->capture_default_str();
  q->add_option("--beta", qa.beta, "Confidence weight")->capture_default_str();
  q->add_option("--format", qa.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  q->add_option("--config", qa.config, "Config file (tokenizer settings)");
  auto* repl = q->add_flag("--repl", qa.repl, "Read one keyword query per line from stdin");
  kw->excludes(repl);
  q->callback([&] {
    if (!qa.repl && qa.keywords.empty()) throw CLI::RequiredError("--keywords");
    action = [&] { return cmd_query(qa); };
  });

  const std::vector<std::string> shapes = {"line", "chain", "star", "ba"};
  std::string shape;
  ShapeArgs gen;
  std::string out;
  auto* g = app.add_subcommand("generate", "Write a synthetic graph file");
  g->add_option("shape", shape, "line, chain, star or ba")->required()->check(CLI::IsMember(shapes));
  g->add_option("--n", gen.n, "Nodes (line, chain and ba)")->capture_default_str();
  g->add_option("--branches", gen.branches, "Star branches")->capture_default_str();
  g->add_option("--length", gen.length, "Star branch length")->capture_default_str();
  g->add_option("--m0", gen.m0, "Initial ring size for ba")->capture_default_str();
  g->add_option("--seed", gen.seed, "Seed for ba")->capture_default_str();
  g->add_option("--distance", gen.distance, "Relabel two nodes at this distance as kwstart/kwend");
  g->add_option("--out", out, "Graph file")->required();
  g->callback([&] { action = [&] { return cmd_generate(shape, gen, out); }; });

  BenchArgs bench;
  bench.shape.n = 2000;
  bench.shape.seed = 7;
  auto* b = app.add_subcommand("bench", "Time searches on synthetic graphs, CSV on stdout");
  b->add_option("shape", shape, "line, chain, star or ba")->required()->check(CLI::IsMember(shapes));
  b->add_option("--from", bench.from, "First size or branch count")->capture_default_str();
  b->add_option("--to", bench.to, "Last size or branch count")->capture_default_str();
  b->add_option("--length", bench.shape.length, "Star branch length")->capture_default_str();
  b->add_option("--n", bench.shape.n, "Nodes for ba")->capture_default_str();
  b->add_option("--m0", bench.shape.m0, "Initial ring size for ba")->capture_default_str();
  b->add_option("--seed", bench.shape.seed, "Seed for ba")->capture_default_str();
  b->add_option("--distances", bench.distances, "Keyword distances for ba, A..B")->capture_default_str();
  b->add_option("--timeout-ms", bench.timeout_ms, "Per-search time budget, 0 for none")
      ->capture_default_str();
  b->callback([&] { action = [&] { return cmd_bench(shape, bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return action();
  } catch (const WeightsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWeights;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace
}  // namespace hetsearch::cli

int main(int argc, char** argv) { return hetsearch::cli::run(argc, argv); }
