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
#include "hetsearch/link.hpp"

#include <algorithm>
#include <set>

#include "graph_access.hpp"
#include "hetsearch/specificity.hpp"
#include "hetsearch/text.hpp"

namespace hetsearch {

using detail::GraphAccess;

namespace {

// URIs and numbers that differ in a few characters name different things.
bool is_fuzzy(NodeKind kind) { return kind != NodeKind::Uri && kind != NodeKind::Number; }

}  // namespace

bool is_link_eligible(const Node& node) { return is_linkable(node.kind) && !node.label.empty(); }

std::optional<LabelKey> label_key(const Node& node) {
  if (!is_link_eligible(node)) return std::nullopt;
  return LabelKey{node.kind, text::nfc(node.label)};
}

NodeId assign_representative(Graph& graph, NodeId id) {
  const Node& node = graph.node(id);
  if (!is_link_eligible(node)) return node.rep;
  auto& group = GraphAccess::link_groups(graph)[GraphAccess::link_key(node.kind, node.label)];
  const auto pos = std::lower_bound(group.nodes.begin(), group.nodes.end(), id);
  if (pos != group.nodes.end() && *pos == id) return graph.representative(id);
  group.nodes.insert(pos, id);

  if (group.joined) {
    const NodeId anchor = group.nodes.front() == id ? group.nodes[1] : group.nodes.front();
    on_equiv_join(graph, graph.representative(anchor), id);
    return graph.representative(id);
  }

  const DatasetId first_dataset = graph.node(group.nodes.front()).dataset;
  const bool spans = std::any_of(group.nodes.begin(), group.nodes.end(), [&](NodeId n) {
    return graph.node(n).dataset != first_dataset;
  });
  if (!spans) return id;

  group.joined = true;
  const NodeId rep = group.nodes.front();
  for (NodeId member : group.nodes) {
    if (member != rep) on_equiv_join(graph, rep, member);
  }
  return graph.representative(id);
}

double label_similarity(std::string_view a, std::string_view b) {
  return text::normalized_similarity(a, b);
}

std::vector<SimilarCandidate> find_similar(const Graph& graph, const InvertedIndex& index,
                                           NodeId id, double tau) {
  const Node& node = graph.node(id);
  if (!is_link_eligible(node) || !is_fuzzy(node.kind) || tau > 1.0) return {};

  std::set<NodeId> pool;
  for (const auto& kw : index.tokenizer().tokenize(node.label, node.kind)) {
    for (NodeId other : index.postings(kw)) pool.insert(other);
  }
  std::set<NodeId> adjacent;
  for (const Neighbor& nb : graph.neighbors(id)) adjacent.insert(nb.other);

  std::vector<SimilarCandidate> out;
  for (NodeId other_id : pool) {
    if (other_id == id || adjacent.contains(other_id)) continue;
    const Node& other = graph.node(other_id);
    if (!is_link_eligible(other) || !is_fuzzy(other.kind) || graph.equivalent(id, other_id) ||
        graph.has_similar_edge(id, other_id)) {
      continue;
    }
    const double sim = label_similarity(node.label, other.label);
    if (sim >= tau && sim < 1.0) out.push_back({other_id, sim});
  }
  return out;
}

LinkOutcome link_node(Graph& graph, const InvertedIndex& index, NodeId id, double tau) {
  LinkOutcome outcome{assign_representative(graph, id), {}};
  for (const auto& candidate : find_similar(graph, index, id, tau)) {
    outcome.similar_edges.push_back(graph.add_edge(id, candidate.node, std::string(kSameAsLabel),
                                                   candidate.similarity, EdgeKind::Similar));
  }
  return outcome;
}

}  // namespace hetsearch
