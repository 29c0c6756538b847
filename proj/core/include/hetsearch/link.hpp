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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/index.hpp"

namespace hetsearch {

inline constexpr double kDefaultSimilarityThreshold = 0.8;

/// Cross-dataset equality key: node kind plus NFC label.
struct LabelKey {
  NodeKind kind;
  std::string label;

  auto operator<=>(const LabelKey&) const = default;
};

/// Nullopt for nodes that never link (internal, dataset, do-not-link, empty label).
std::optional<LabelKey> label_key(const Node& node);

bool is_link_eligible(const Node& node);

/// Registers the node in its label group. Once the group spans two datasets
/// every member joins the set of the first-registered member. Returns the
/// node's representative (itself when nothing joined). Ineligible nodes are
/// left alone.
NodeId assign_representative(Graph& graph, NodeId node);

/// 1 - edit distance / longer length over NFC-lowercased code points.
double label_similarity(std::string_view a, std::string_view b);

struct SimilarCandidate {
  NodeId node;
  double similarity = 0.0;
};

/// Eligible nodes sharing at least one keyword with `node` whose similarity
/// lies in [tau, 1), excluding equivalent nodes, direct neighbors and pairs
/// already joined by a similar edge. URI and number nodes only link by
/// equality. Sorted by node id.
std::vector<SimilarCandidate> find_similar(const Graph& graph, const InvertedIndex& index,
                                           NodeId node, double tau);

struct LinkOutcome {
  NodeId rep;
  std::vector<EdgeId> similar_edges;
};

/// assign_representative followed by find_similar, materializing one
/// Similar edge per candidate with confidence = similarity.
LinkOutcome link_node(Graph& graph, const InvertedIndex& index, NodeId node, double tau);

}  // namespace hetsearch
