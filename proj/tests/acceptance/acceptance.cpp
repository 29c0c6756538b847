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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hetsearch/link.hpp"
#include "hetsearch/score.hpp"
#include "hetsearch/search.hpp"
#include "hetsearch/specificity.hpp"
#include "hetsearch/syngen.hpp"
#include "oracles.hpp"

namespace hetsearch {
namespace {

// Tolerances.
constexpr double kFigureTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-12;
constexpr double kFigureBudgetSeconds = 1.0;
constexpr std::size_t kLineExploredFactor = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      outcome_.pass = false;
      if (failures_++ < 5) note("failed: " + what);
    }
  }
  void note(const std::string& s) {
    if (!outcome_.detail.empty()) outcome_.detail += "; ";
    outcome_.detail += s;
  }
  Outcome done() {
    if (failures_ > 5) note(std::to_string(failures_ - 5) + " more failures");
    return outcome_;
  }

 private:
  Outcome outcome_;
  std::size_t failures_ = 0;
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Query unlimited(std::vector<std::string> keywords) {
  Query q;
  q.keywords = std::move(keywords);
  q.k = kUnlimited;
  q.max_answers = kUnlimited;
  q.timeout.reset();
  return q;
}

std::set<std::vector<EdgeKey>> keys_of(const std::vector<Answer>& answers) {
  std::set<std::vector<EdgeKey>> out;
  for (const auto& a : answers) out.insert(a.key);
  return out;
}

EdgeRef stored_between(const Graph& g, NodeId a, NodeId b) {
  for (const Edge& e : g.edges()) {
    if ((e.source == a && e.target == b) || (e.source == b && e.target == a)) {
      return EdgeRef::stored(e);
    }
  }
  throw std::runtime_error("no stored edge between " + std::to_string(a.value) + " and " +
                           std::to_string(b.value));
}

NodeId in_dataset(const Graph& g, std::string_view label, NodeKind kind, DatasetId ds) {
  for (const Node& n : g.nodes()) {
    if (n.label == label && n.kind == kind && n.dataset == ds) return n.id;
  }
  throw std::runtime_error("no node labeled " + std::string(label));
}

bool minimal(const Graph& g, const MatchTable& m, const std::vector<EdgeRef>& edges) {
  const auto nodes = nodes_of(edges, NodeId{});
  return is_minimal_answer(g, m, edges, nodes);
}

// Connected groups of sameAs edges inside one answer.
std::vector<std::vector<EdgeRef>> same_as_groups(const Answer& a) {
  std::vector<EdgeRef> same;
  for (const auto& e : a.edges) {
    if (e.kind == EdgeKind::SameAs) same.push_back(e);
  }
  std::vector<std::vector<EdgeRef>> groups;
  std::vector<bool> used(same.size(), false);
  for (std::size_t i = 0; i < same.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<EdgeRef> group{same[i]};
    std::set<NodeId> nodes{same[i].source, same[i].target};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < same.size(); ++j) {
        if (used[j] || (!nodes.contains(same[j].source) && !nodes.contains(same[j].target))) continue;
        used[j] = true;
        group.push_back(same[j]);
        nodes.insert(same[j].source);
        nodes.insert(same[j].target);
        grew = true;
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::size_t longest_same_as_group(const Answer& a) {
  std::size_t best = 0;
  for (const auto& g : same_as_groups(a)) best = std::max(best, g.size());
  return best;
}

// ---------------------------------------------------------------------------

Outcome specificity_figures() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const auto continent = fixtures::continent_fixture(54);
  const double mayor = continent.graph.edge(continent.mayor).specificity;
  c.expect(std::abs(mayor - 1.0) <= kFigureTolerance, "unique edge s=" + fmt(mayor));
  for (EdgeId e : continent.part_of) {
    const double s = continent.graph.edge(e).specificity;
    c.expect(std::abs(s - 2.0 / 55.0) <= kFigureTolerance, "partOf s=" + fmt(s));
  }
  const double part_of = continent.graph.edge(continent.part_of[0]).specificity;

  auto join = fixtures::join_fixture();
  const double before = join.graph.edge(join.e).specificity;
  const auto n_in_before = join.graph.edge(join.e).n_in;
  on_equiv_join(join.graph, join.n1, join.n2);
  const double after = join.graph.edge(join.e).specificity;
  const auto n_in_after = join.graph.edge(join.e).n_in;
  c.expect(std::abs(before - 0.5) <= kFigureTolerance, "before join s=" + fmt(before));
  c.expect(std::abs(after - 1.0 / 3.0) <= kFigureTolerance, "after join s=" + fmt(after));
  c.expect(n_in_before == 3 && n_in_after == 5, "n_in " + std::to_string(n_in_before) + "->" +
                                                    std::to_string(n_in_after));
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kFigureBudgetSeconds, "runtime " + fmt(elapsed) + "s");
  c.note("s=" + fmt(mayor) + ", " + fmt(part_of, 4) + ", " + fmt(before) + "->" + fmt(after, 4) +
         ", n_in " + std::to_string(n_in_before) + "->" + std::to_string(n_in_after));
  return c.done();
}

// ---------------------------------------------------------------------------

struct RandomDataset {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
};

std::vector<RandomDataset> random_sequence(std::mt19937_64& rng) {
  const char* pool[] = {"p", "q", "r", "s", "t", "u"};
  const char* edge_labels[] = {"l", "m", "n"};
  auto below = [&](std::uint64_t n) { return syngen::uniform_below(rng, n); };
  std::vector<RandomDataset> out(2 + below(4));
  std::size_t budget = 50;
  for (auto& ds : out) {
    const std::size_t n = std::min<std::size_t>(budget, 3 + below(8));
    budget -= n;
    for (std::size_t i = 0; i < n; ++i) ds.labels.push_back(pool[below(6)]);
    const std::size_t m = 2 + below(11);
    for (std::size_t i = 0; i < m && n >= 2; ++i) {
      const std::size_t s = below(n);
      const std::size_t t = below(n);
      if (s != t) ds.edges.emplace_back(s, t, edge_labels[below(3)]);
    }
  }
  return out;
}

// Registers the datasets in `order`, checking every edge against both oracles
// after each step. Returns final specificity per (dataset, edge position).
std::map<std::pair<std::size_t, std::size_t>, double> replay(
    const std::vector<RandomDataset>& datasets, const std::vector<std::size_t>& order,
    bool link_first, double& worst) {
  Graph g;
  std::map<std::pair<std::size_t, std::size_t>, EdgeId> ids;
  auto check = [&] {
    for (const Edge& e : g.edges()) {
      worst = std::max(worst, std::abs(e.specificity - specificity_naive(g, e.id)));
      worst = std::max(worst, std::abs(e.specificity - oracle::specificity(g, e.id)));
    }
  };
  for (std::size_t d : order) {
    const DatasetId ds = g.add_dataset();
    std::vector<NodeId> nodes;
    for (const auto& l : datasets[d].labels) nodes.push_back(g.add_node(NodeKind::Value, l, ds));
    if (link_first) {
      for (NodeId n : nodes) {
        assign_representative(g, n);
        check();
      }
    }
    for (std::size_t i = 0; i < datasets[d].edges.size(); ++i) {
      const auto& [s, t, l] = datasets[d].edges[i];
      ids[{d, i}] = g.add_edge(nodes[s], nodes[t], l, 1.0);
      check();
    }
    if (!link_first) {
      for (NodeId n : nodes) {
        assign_representative(g, n);
        check();
      }
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, double> out;
  for (const auto& [tag, id] : ids) out[tag] = g.edge(id).specificity;
  return out;
}

Outcome incremental_specificity() {
  Checker c;
  double worst = 0.0;
  double worst_order = 0.0;
  std::size_t edges = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const auto datasets = random_sequence(rng);
    std::vector<std::size_t> order(datasets.size());
    std::iota(order.begin(), order.end(), 0);
    const auto reference = replay(datasets, order, seed % 2 == 0, worst);
    std::reverse(order.begin(), order.end());
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(seed % order.size()),
                order.end());
    const auto permuted = replay(datasets, order, seed % 2 == 1, worst);
    edges += reference.size();
    for (const auto& [tag, s] : reference) {
      worst_order = std::max(worst_order, std::abs(permuted.at(tag) - s));
    }
  }
  c.expect(worst <= kOracleTolerance, "incremental vs naive diff " + fmt(worst));
  c.expect(worst_order <= kOracleTolerance, "order dependence " + fmt(worst_order));
  c.note("200 sequences, " + std::to_string(edges) + " edges, max |diff| " + fmt(worst) +
         ", max order diff " + fmt(worst_order));
  return c.done();
}

// ---------------------------------------------------------------------------

// Every 2- and 3-subset of `labels`.
std::vector<std::vector<std::string>> subsets(const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back({labels[i], labels[j]});
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({labels[i], labels[j], labels[k]});
    }
  }
  return out;
}

Outcome oracle_equivalence() {
  Checker c;
  std::size_t queries = 0;
  std::size_t answers = 0;
  // The oracle enumerates each graph's subtrees once for all its queries.
  auto compare = [&](const IntegratedGraph& g, const std::vector<std::vector<std::string>>& all,
                     const std::string& where) {
    std::vector<std::vector<std::string>> kept;
    std::vector<MatchTable> tables;
    for (const auto& kws : all) {
      MatchTable m = MatchTable::build(g.graph, g.index, kws);
      if (!m.unmatched_keywords().empty()) continue;
      kept.push_back(kws);
      tables.push_back(std::move(m));
    }
    const auto expected = brute_force_answers(g.graph, tables, g.graph.node_count());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const auto got = gam_search(g.graph, tables[i], unlimited(kept[i]));
      ++queries;
      answers += expected[i].size();
      std::string q;
      for (const auto& k : kept[i]) q += " " + k;
      c.expect(keys_of(got.answers) == keys_of(expected[i]),
               where + " query" + q + ": gam " + std::to_string(got.answers.size()) +
                   " vs oracle " + std::to_string(expected[i].size()));
    }
  };
  std::mt19937_64 rng(20240601);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 5 + seed % 8;  // 5..12 nodes
    const IntegratedGraph g = syngen::barabasi_albert(n, 2, seed);
    std::vector<std::string> labels;
    while (labels.size() < 5) {
      const std::string l = "node" + std::to_string(1 + syngen::uniform_below(rng, n));
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    }
    compare(g, subsets(labels), "ba seed " + std::to_string(seed));
  }
  const IntegratedGraph example = fixtures::example_graph();
  const std::vector<std::string> example_labels = {"balkany", "africa",    "estate", "gyucy",
                                                   "levallois", "marrakech", "areva"};
  compare(example, subsets(example_labels), "example");
  c.note(std::to_string(queries) + " queries, " + std::to_string(answers) + " answers compared");
  return c.done();
}

// ---------------------------------------------------------------------------

Outcome line_graph() {
  Checker c;
  for (std::size_t n : {10u, 100u, 500u}) {
    const IntegratedGraph g = syngen::line(n);
    Query q = unlimited({syngen::kStartLabel, syngen::kEndLabel});
    const auto r = gam_search(g, q);
    c.expect(r.answers.size() == 1, "n=" + std::to_string(n) + " answers " +
                                        std::to_string(r.answers.size()));
    if (!r.answers.empty()) {
      c.expect(r.answers[0].edges.size() == n - 1, "n=" + std::to_string(n) + " not the whole path");
    }
    c.expect(r.stats.trees_explored <= kLineExploredFactor * n,
             "n=" + std::to_string(n) + " explored " + std::to_string(r.stats.trees_explored));
    // Wall-clock shape is reported, not asserted.
    c.note("n=" + std::to_string(n) + " explored=" + std::to_string(r.stats.trees_explored) +
           " first=" + fmt(r.stats.time_first_ms, 3) + "ms total=" + fmt(r.stats.time_total_ms, 3) +
           "ms first/total=" + fmt(r.stats.time_first_ms / r.stats.time_total_ms, 2));
  }
  return c.done();
}

Outcome chain_graph() {
  Checker c;
  for (std::size_t n = 2; n <= 6; ++n) {
    const IntegratedGraph g = syngen::chain(n);
    const std::vector<std::string> kws = {syngen::kStartLabel, syngen::kEndLabel};
    const MatchTable m = MatchTable::build(g.graph, g.index, kws);
    const auto r = gam_search(g.graph, m, unlimited(kws));
    const auto oracle = brute_force_answers(g.graph, m, g.graph.node_count());
    const std::size_t expected = std::size_t{1} << (n - 1);
    c.expect(r.answers.size() == expected, "n=" + std::to_string(n) + " answers " +
                                               std::to_string(r.answers.size()));
    c.expect(keys_of(r.answers) == keys_of(oracle), "n=" + std::to_string(n) + " differs from oracle");
    c.note("n=" + std::to_string(n) + " answers=" + std::to_string(r.answers.size()) +
           " first=" + fmt(r.stats.time_first_ms, 3) + "ms total=" + fmt(r.stats.time_total_ms, 3) +
           "ms");
  }
  return c.done();
}

Outcome star_graph() {
  Checker c;
  std::vector<std::size_t> explored;
  for (std::size_t b = 2; b <= 6; ++b) {
    const IntegratedGraph g = syngen::star(b, 10);
    const std::vector<std::string> kws = {"kw1", "kw2"};
    const MatchTable m = MatchTable::build(g.graph, g.index, kws);
    const auto r = gam_search(g, unlimited(kws));
    const std::string tag = "branches=" + std::to_string(b);
    c.expect(!r.answers.empty(), tag + " no answer");
    for (const Answer& a : r.answers) {
      const auto groups = same_as_groups(a);
      c.expect(!groups.empty(), tag + " answer without sameAs edge");
      for (const auto& group : groups) {
        const std::size_t set_size = g.graph.equivalence_set(group[0].source).size();
        c.expect(group.size() + 1 <= set_size, tag + " too many adjacent sameAs edges");
      }
      // No interior node held only by sameAs edges unless it matches.
      for (NodeId n : a.nodes) {
        std::size_t degree = 0;
        std::size_t same = 0;
        for (const auto& e : a.edges) {
          if (!e.touches(n)) continue;
          ++degree;
          same += e.kind == EdgeKind::SameAs;
        }
        c.expect(!(degree >= 2 && same == degree && m.mask(n) == 0),
                 tag + " redundant sameAs path through node " + std::to_string(n.value));
      }
      c.expect(is_minimal_answer(g.graph, m, a.edges, a.nodes), tag + " answer not minimal");
    }
    explored.push_back(r.stats.trees_explored);
    c.note(tag + " answers=" + std::to_string(r.answers.size()) +
           " explored=" + std::to_string(r.stats.trees_explored) +
           " total=" + fmt(r.stats.time_total_ms, 3) + "ms");
  }
  c.expect(explored.back() > explored.front(), "explored trees do not grow with branches");
  return c.done();
}

Outcome sameas_construction() {
  Checker c;
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto f = fixtures::equivalence_star(k);
    const auto r = gam_search(f.g, unlimited(f.keywords));
    const bool found = std::any_of(r.answers.begin(), r.answers.end(),
                                   [&](const Answer& a) { return longest_same_as_group(a) == k - 1; });
    c.expect(found, "k=" + std::to_string(k) + " no answer with k-1 sameAs edges");
    c.note("k=" + std::to_string(k) + " answers=" + std::to_string(r.answers.size()));
  }
  return c.done();
}

Outcome minimality_examples() {
  Checker c;
  const IntegratedGraph ig = fixtures::example_graph();
  const Graph& g = ig.graph;
  const NodeId s1 = fixtures::find_node(g, "I. Balkany met P. Balkany in Gyucy.", NodeKind::Value);
  const NodeId s2 = fixtures::find_node(g, "Areva signed a uranium deal in Centrafrique.", NodeKind::Value);
  const DatasetId article = g.node(s1).dataset;
  const NodeId pb_article = in_dataset(g, "P. Balkany", NodeKind::EntityPerson, article);
  const NodeId root = fixtures::find_node(g, "article.txt", NodeKind::DatasetRoot);
  const NodeId cf = fixtures::find_node(g, "Centrafrique", NodeKind::EntityLocation);
  const NodeId car = fixtures::find_node(g, "Central African Republic", NodeKind::Value);

  // "Balkany Centrafrique": the similar edge adds a second match of
  // Centrafrique to a tree that already has one.
  MatchTable bc = MatchTable::build(g, ig.index, {"balkany", "centrafrique"});
  bc.add(1, car);
  std::vector<EdgeRef> tree = {stored_between(g, pb_article, s1), stored_between(g, s1, root),
                               stored_between(g, root, s2), stored_between(g, s2, cf)};
  c.expect(minimal(g, bc, tree), "tree without the similar edge rejected");
  tree.push_back(stored_between(g, cf, car));
  c.expect(tree.back().kind == EdgeKind::Similar, "not a similar edge");
  const bool rejected = !minimal(g, bc, tree);
  c.expect(rejected, "tree through the similarity edge accepted");

  // "Gyucy Balkany Levallois" with the article and officials P. Balkany.
  const std::vector<std::string> gbl_kws = {"gyucy", "balkany", "levallois"};
  const MatchTable gbl = MatchTable::build(g, ig.index, gbl_kws);
  const NodeId gyucy = fixtures::find_node(g, "Gyucy", NodeKind::EntityLocation);
  const NodeId lev_value = fixtures::find_node(g, "Levallois-Perret", NodeKind::Value);
  const NodeId lev = fixtures::find_node(g, "Levallois-Perret", NodeKind::EntityLocation);
  const DatasetId officials = g.node(lev).dataset;
  const NodeId pb_value = in_dataset(g, "P. Balkany", NodeKind::Value, officials);
  const NodeId pb_official = in_dataset(g, "P. Balkany", NodeKind::EntityPerson, officials);
  NodeId record{};
  for (EdgeId e : g.in_edges(lev_value)) record = g.edge(e).source;
  const std::vector<EdgeRef> two_matches = {
      stored_between(g, gyucy, s1),          stored_between(g, s1, pb_article),
      EdgeRef::same_as(pb_article, pb_official), stored_between(g, pb_value, pb_official),
      stored_between(g, record, pb_value),   stored_between(g, record, lev_value),
      stored_between(g, lev_value, lev)};
  c.expect(g.equivalent(pb_article, pb_official), "Balkany entities not equivalent");
  const bool accepted = minimal(g, gbl, two_matches);
  c.expect(accepted, "tree with two equivalent Balkany matches rejected");

  const auto r = gam_search(ig, unlimited(gbl_kws));
  const bool searched = std::any_of(r.answers.begin(), r.answers.end(), [&](const Answer& a) {
    return a.matches[1].size() >= 2 && is_minimal_answer(g, gbl, a.edges, a.nodes);
  });
  c.expect(searched, "search finds no answer with two equivalent Balkany matches");
  c.note(std::string("similarity tree ") + (rejected ? "rejected" : "accepted") +
         ", equivalent-match tree " + (accepted ? "accepted" : "rejected"));
  return c.done();
}

Outcome non_monotonicity() {
  Checker c;
  const ScoreParams params;  // 1/3, 1/3
  const std::vector<EdgeFactors> t1(4, EdgeFactors{1.0, 0.5});
  std::vector<EdgeFactors> t3 = t1;
  t3.push_back({0.5, 0.25});
  const double ms1 = 0.4;
  const double ms3 = 1.0;
  const auto [c1, s1] = connection_score(t1);
  const auto [c3, s3] = connection_score(t3);
  const double total1 = combine(ms1, c1, s1, params).total;
  const double total3 = combine(ms3, c3, s3, params).total;
  c.expect(c3 <= c1 && s3 <= s1, "connection components increased");
  c.expect(total3 > total1, "score(T3) <= score(T1)");
  c.note("score(T1)=" + fmt(total1) + " score(T3)=" + fmt(total3));
  return c.done();
}

Outcome loading_modes() {
  Checker c;
  const std::size_t inst = fixtures::count_label(fixtures::paris(LoadMode::PerInstance).graph, "Paris");
  const std::size_t type = fixtures::count_label(fixtures::paris(LoadMode::PerType).graph, "Paris");
  const std::size_t value = fixtures::count_label(fixtures::paris(LoadMode::PerValue).graph, "Paris");
  c.expect(inst == 15 && type == 2 && value == 1, "counts " + std::to_string(inst) + "/" +
                                                       std::to_string(type) + "/" + std::to_string(value));
  RegistrationReport report;
  fixtures::paris(LoadMode::PerType, SourceFormat::NTriples, &report);
  c.expect(report.mode_used == LoadMode::PerValue && !report.warnings.empty(),
           "N-Triples not forced to per-value");
  c.note("Paris nodes " + std::to_string(inst) + "/" + std::to_string(type) + "/" +
         std::to_string(value) + ", N-Triples mode " + std::string(to_string(report.mode_used)));
  return c.done();
}

IntegratedGraph wrap(Graph graph) {
  IntegratedGraph g;
  g.graph = std::move(graph);
  g.index.rebuild(g.graph);
  return g;
}

Outcome persistence() {
  Checker c;
  std::vector<std::pair<std::string, IntegratedGraph>> all;
  all.emplace_back("example", fixtures::example_graph());
  all.emplace_back("paris per-instance", fixtures::paris(LoadMode::PerInstance));
  all.emplace_back("paris per-type", fixtures::paris(LoadMode::PerType));
  all.emplace_back("paris per-value", fixtures::paris(LoadMode::PerValue));
  all.emplace_back("paris ntriples", fixtures::paris(LoadMode::PerValue, SourceFormat::NTriples));
  all.emplace_back("continent", wrap(fixtures::continent_fixture(54).graph));
  {
    auto join = fixtures::join_fixture();
    on_equiv_join(join.graph, join.n1, join.n2);
    all.emplace_back("join", wrap(std::move(join.graph)));
  }
  for (std::size_t k = 3; k <= 5; ++k) {
    all.emplace_back("equivalence star " + std::to_string(k), fixtures::equivalence_star(k).g);
  }
  for (std::size_t n : {10u, 100u, 500u}) all.emplace_back("line " + std::to_string(n), syngen::line(n));
  for (std::size_t n = 2; n <= 6; ++n) all.emplace_back("chain " + std::to_string(n), syngen::chain(n));
  for (std::size_t b = 2; b <= 6; ++b) all.emplace_back("star " + std::to_string(b), syngen::star(b, 10));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    all.emplace_back("ba " + std::to_string(seed), syngen::barabasi_albert(5 + seed % 8, 2, seed));
  }

  const auto dir = std::filesystem::temp_directory_path() / "hetsearch_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& [name, g] : all) {
    const auto first = dir / "first.clg";
    const auto second = dir / "second.clg";
    persist(g, first);
    persist(load(first, g.index.tokenizer()), second);
    c.expect(fixtures::read_file(first) == fixtures::read_file(second), name + " graph file differs");
    c.expect(fixtures::read_file(index_path(first)) == fixtures::read_file(index_path(second)),
             name + " index file differs");
  }
  std::filesystem::remove_all(dir);
  c.note(std::to_string(all.size()) + " fixtures round-tripped");
  return c.done();
}

}  // namespace
}  // namespace hetsearch

int main() {
  using namespace hetsearch;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"specificity figures", specificity_figures},
      {"incremental vs naive specificity", incremental_specificity},
      {"oracle equivalence", oracle_equivalence},
      {"line graph", line_graph},
      {"chain graph", chain_graph},
      {"star graph", star_graph},
      {"k-1 sameAs construction", sameas_construction},
      {"minimality examples", minimality_examples},
      {"non-monotonic score", non_monotonicity},
      {"loading modes", loading_modes},
      {"persistence round trip", persistence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    std::printf("%s %zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
