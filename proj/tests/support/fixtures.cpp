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
#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hetsearch/link.hpp"
#include "hetsearch/stemmer.hpp"

namespace hetsearch::fixtures {

std::filesystem::path data_dir() { return HETSEARCH_TEST_DATA; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

IntegratedGraph example_graph() {
  IntegratedGraph g;
  RegistrationConfig config;
  config.gazetteer = Gazetteer::load(data_dir() / "example" / "gazetteer.tsv");
  // Keeps "I. Balkany" and "P. Balkany" apart, as in the drawn graph.
  config.tau = 0.95;
  for (const char* name : {"assets.csv", "officials.json", "article.txt", "dbpedia.nt"}) {
    register_file(g, data_dir() / "example" / name, std::nullopt, config);
  }
  g.graph.add_edge(find_node(g.graph, "Centrafrique", NodeKind::EntityLocation),
                   find_node(g.graph, "Central African Republic", NodeKind::Value),
                   std::string(kSameAsLabel), 0.85, EdgeKind::Similar);
  return g;
}

NodeId find_node(const Graph& graph, std::string_view label, NodeKind kind) {
  for (const Node& n : graph.nodes()) {
    if (n.label == label && n.kind == kind) return n.id;
  }
  throw std::runtime_error("no node labeled " + std::string(label));
}

std::vector<NodeId> find_nodes(const Graph& graph, std::string_view label) {
  std::vector<NodeId> out;
  for (const Node& n : graph.nodes()) {
    if (n.label == label) out.push_back(n.id);
  }
  return out;
}

EquivalenceStar equivalence_star(std::size_t k) {
  EquivalenceStar f;
  for (std::size_t i = 1; i <= k; ++i) {
    const DatasetId ds = f.g.graph.add_dataset();
    const std::string kw = "a" + std::to_string(i);
    f.a.push_back(f.g.graph.add_node(NodeKind::Value, kw, ds));
    f.x.push_back(f.g.graph.add_node(NodeKind::Value, "x", ds));
    f.g.graph.add_edge(f.a.back(), f.x.back(), "r", 1.0);
    f.keywords.push_back(kw);
  }
  for (NodeId x : f.x) assign_representative(f.g.graph, x);
  f.g.index.rebuild(f.g.graph);
  return f;
}

JoinFixture join_fixture() {
  JoinFixture f;
  Graph& g = f.graph;
  const DatasetId d1 = g.add_dataset();
  const DatasetId d2 = g.add_dataset();
  f.x = g.add_node(NodeKind::Value, "x", d1);
  f.n1 = g.add_node(NodeKind::Value, "n", d1);
  const NodeId y = g.add_node(NodeKind::Value, "y", d1);
  const NodeId z = g.add_node(NodeKind::Value, "z", d1);
  f.e = g.add_edge(f.x, f.n1, "l", 1.0);
  g.add_edge(y, f.n1, "l", 1.0);
  g.add_edge(z, f.n1, "l", 1.0);
  f.n2 = g.add_node(NodeKind::Value, "n", d2);
  const NodeId u = g.add_node(NodeKind::Value, "u", d2);
  const NodeId v = g.add_node(NodeKind::Value, "v", d2);
  g.add_edge(u, f.n2, "l", 1.0);
  g.add_edge(v, f.n2, "l", 1.0);
  return f;
}

ContinentFixture continent_fixture(std::size_t countries) {
  ContinentFixture f;
  Graph& g = f.graph;
  const DatasetId ds = g.add_dataset();
  const NodeId continent = g.add_node(NodeKind::Uri, "http://dbpedia.org/resource/Africa", ds);
  for (std::size_t i = 0; i < countries; ++i) {
    const NodeId c = g.add_node(NodeKind::Uri, "http://dbpedia.org/resource/C" + std::to_string(i), ds);
    f.part_of.push_back(g.add_edge(c, continent, "dbo:partOf", 1.0));
  }
  const DatasetId json = g.add_dataset();
  const NodeId council = g.add_node(NodeKind::Internal, "", json);
  const NodeId mayor = g.add_node(NodeKind::Value, "P. Balkany", json);
  f.mayor = g.add_edge(council, mayor, "mayor", 1.0);
  return f;
}

IntegratedGraph paris(LoadMode mode, SourceFormat format, RegistrationReport* report) {
  IntegratedGraph g;
  RegistrationConfig config;
  config.mode = mode;
  const char* file = format == SourceFormat::NTriples ? "paris.nt" : "paris.json";
  RegistrationReport r = register_file(g, data_dir() / file, format, config);
  if (report) *report = std::move(r);
  return g;
}

std::size_t count_label(const Graph& graph, std::string_view label) {
  return find_nodes(graph, label).size();
}

Tokenizer plain_tokenizer() {
  return Tokenizer(Tokenizer::default_stopwords(), make_stemmer("none"));
}

}  // namespace hetsearch::fixtures
