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
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/ingest.hpp"
#include "hetsearch/store.hpp"

namespace hetsearch::fixtures {

std::filesystem::path data_dir();

std::string read_file(const std::filesystem::path& path);

/// Officials' assets table, elected officials JSON, a news article and a
/// DBpedia fragment, registered in that order with the example gazetteer,
/// plus a 0.85 similar edge between "Centrafrique" and "Central African
/// Republic".
IntegratedGraph example_graph();

/// First node with this label and kind; throws when absent.
NodeId find_node(const Graph& graph, std::string_view label, NodeKind kind);
std::vector<NodeId> find_nodes(const Graph& graph, std::string_view label);

/// 2k nodes: a_i -> x_i for i = 1..k, each pair in its own dataset, every x_i
/// labeled "x" so they form one equivalence set represented by x_1.
struct EquivalenceStar {
  IntegratedGraph g;
  std::vector<NodeId> a;
  std::vector<NodeId> x;
  std::vector<std::string> keywords;  // "a1".."ak"
};
EquivalenceStar equivalence_star(std::size_t k);

/// x -l-> n1 with two more l-edges into n1 in one dataset, and two l-edges
/// into n2 in another. n2 has not joined n1's set yet.
struct JoinFixture {
  Graph graph;
  NodeId x;
  NodeId n1;
  NodeId n2;
  EdgeId e;  // x -l-> n1
};
JoinFixture join_fixture();

/// `countries` nodes with a partOf edge to one continent node, plus a city
/// council with a single mayor edge.
struct ContinentFixture {
  Graph graph;
  std::vector<EdgeId> part_of;
  EdgeId mayor;
};
ContinentFixture continent_fixture(std::size_t countries);

/// Ten persons living in Paris and five firms located there.
IntegratedGraph paris(LoadMode mode, SourceFormat format = SourceFormat::Json,
                      RegistrationReport* report = nullptr);
std::size_t count_label(const Graph& graph, std::string_view label);

/// Tokenizer without stemming, so keywords equal lowercase words.
Tokenizer plain_tokenizer();

}  // namespace hetsearch::fixtures
