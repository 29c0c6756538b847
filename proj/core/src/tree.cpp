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
#include "hetsearch/tree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "hetsearch/score.hpp"

namespace hetsearch {

namespace {

const NodeId kNoNode{~std::uint64_t{0}};

bool key_less(const EdgeRef& a, const EdgeRef& b) { return a.key() < b.key(); }

KeywordMask unique_mask(const PartialTree& t) {
  KeywordMask m = 0;
  for (std::size_t i = 0; i < t.match_count.size(); ++i) {
    if (t.match_count[i] == 1) m |= KeywordMask{1} << i;
  }
  return m;
}

// Every leaf other than the root must be the only match of some keyword.
bool leaves_ok(const MatchTable& matches, const PartialTree& t) {
  if (t.edges.empty()) return true;
  std::vector<std::uint32_t> degree(t.nodes.size(), 0);
  auto slot = [&](NodeId n) {
    return static_cast<std::size_t>(std::lower_bound(t.nodes.begin(), t.nodes.end(), n) -
                                    t.nodes.begin());
  };
  for (const EdgeRef& e : t.edges) {
    ++degree[slot(e.source)];
    ++degree[slot(e.target)];
  }
  const KeywordMask unique = unique_mask(t);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (degree[i] != 1 || t.nodes[i] == t.root) continue;
    if ((matches.mask(t.nodes[i]) & unique) == 0) return false;
  }
  return true;
}

// Adds the matches of `node` to the tree; false on a non-equivalent double match.
bool absorb(const Graph& graph, const MatchTable& matches, PartialTree& t, NodeId node) {
  const KeywordMask m = matches.mask(node);
  if (m == 0) return true;
  const NodeId rep = graph.representative(node);
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if ((m & (KeywordMask{1} << i)) == 0) continue;
    if (t.match_count[i] > 0 && t.match_rep[i] != rep) return false;
    t.match_rep[i] = rep;
    ++t.match_count[i];
  }
  t.matched |= m;
  return true;
}

std::optional<PartialTree> extend(const Graph& graph, const MatchTable& matches,
                                  const PartialTree& tree, const EdgeRef& edge) {
  if (!edge.touches(tree.root) || edge.source == edge.target) return std::nullopt;
  const NodeId next = edge.other(tree.root);
  if (tree.contains(next) || !traversable(graph, edge)) return std::nullopt;
  PartialTree t = tree;
  if (!absorb(graph, matches, t, next)) return std::nullopt;
  t.nodes.insert(std::lower_bound(t.nodes.begin(), t.nodes.end(), next), next);
  t.edges.insert(std::lower_bound(t.edges.begin(), t.edges.end(), edge, key_less), edge);
  const EdgeFactors f = factors(graph, edge);
  t.conf_prod *= f.confidence;
  t.spec_prod *= f.specificity;
  t.root = next;
  if (!leaves_ok(matches, t)) return std::nullopt;
  return t;
}

}  // namespace

MatchTable::MatchTable(std::vector<std::string> keywords) : keywords_(std::move(keywords)) {
  if (keywords_.empty() || keywords_.size() > kMaxKeywords) {
    throw std::invalid_argument("a query needs between 1 and 16 keywords");
  }
  per_keyword_.resize(keywords_.size());
}

MatchTable MatchTable::build(const Graph& graph, const InvertedIndex& index,
                             std::vector<std::string> keywords) {
  MatchTable table(std::move(keywords));
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (const auto& m : index.lookup(graph, table.keywords_[i])) table.add(i, m.node);
  }
  return table;
}

void MatchTable::add(std::size_t keyword, NodeId node) {
  auto& list = per_keyword_.at(keyword);
  const auto pos = std::lower_bound(list.begin(), list.end(), node);
  if (pos != list.end() && *pos == node) return;
  list.insert(pos, node);
  masks_[node] |= KeywordMask{1} << keyword;
}

KeywordMask MatchTable::mask(NodeId node) const {
  const auto it = masks_.find(node);
  return it == masks_.end() ? 0 : it->second;
}

std::vector<NodeId> MatchTable::matching_nodes() const {
  std::vector<NodeId> out;
  out.reserve(masks_.size());
  for (const auto& [node, mask] : masks_) out.push_back(node);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> MatchTable::unmatched_keywords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < per_keyword_.size(); ++i) {
    if (per_keyword_[i].empty()) out.push_back(i);
  }
  return out;
}

bool traversable(const Graph& graph, const EdgeRef& edge) {
  return graph.node(edge.source).kind != NodeKind::DoNotLink &&
         graph.node(edge.target).kind != NodeKind::DoNotLink;
}

std::vector<EdgeKey> canonical_key(std::span<const EdgeRef> edges, NodeId lone_node) {
  if (edges.empty()) return {EdgeKey{2, lone_node.value, 0}};
  std::vector<EdgeKey> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) keys.push_back(e.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool PartialTree::contains(NodeId n) const {
  return std::binary_search(nodes.begin(), nodes.end(), n);
}

std::vector<EdgeKey> PartialTree::edge_keys() const { return canonical_key(edges, root); }

PartialTree seed_tree(const Graph& graph, const MatchTable& matches, NodeId node) {
  PartialTree t;
  t.root = node;
  t.nodes = {node};
  t.match_count.assign(matches.size(), 0);
  t.match_rep.assign(matches.size(), kNoNode);
  absorb(graph, matches, t, node);
  return t;
}

std::optional<PartialTree> grow(const Graph& graph, const MatchTable& matches,
                                const PartialTree& tree, const EdgeRef& edge) {
  if (edge.kind == EdgeKind::SameAs) return std::nullopt;
  return extend(graph, matches, tree, edge);
}

std::optional<PartialTree> grow_to_rep(const Graph& graph, const MatchTable& matches,
                                       const PartialTree& tree) {
  const NodeId rep = graph.representative(tree.root);
  if (rep == tree.root) return std::nullopt;
  return extend(graph, matches, tree, EdgeRef::same_as(tree.root, rep));
}

std::optional<PartialTree> grow_from_rep(const Graph& graph, const MatchTable& matches,
                                         const PartialTree& tree, NodeId member) {
  if (graph.representative(tree.root) != tree.root || member == tree.root ||
      graph.representative(member) != tree.root) {
    return std::nullopt;
  }
  return extend(graph, matches, tree, EdgeRef::same_as(member, tree.root));
}

std::optional<PartialTree> merge(const Graph& /*graph*/, const MatchTable& matches,
                                 const PartialTree& a, const PartialTree& b) {
  if (a.root != b.root || a.edges.empty() || b.edges.empty()) return std::nullopt;
  // Only the root may be shared.
  {
    auto i = a.nodes.begin();
    auto j = b.nodes.begin();
    while (i != a.nodes.end() && j != b.nodes.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        if (*i != a.root) return std::nullopt;
        ++i;
        ++j;
      }
    }
  }
  PartialTree t;
  t.root = a.root;
  t.match_count.assign(matches.size(), 0);
  t.match_rep.assign(matches.size(), kNoNode);
  const KeywordMask root_mask = matches.mask(a.root);
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const bool in_a = a.match_count[i] > 0;
    const bool in_b = b.match_count[i] > 0;
    if (in_a && in_b && a.match_rep[i] != b.match_rep[i]) return std::nullopt;
    const bool root_matches = (root_mask & (KeywordMask{1} << i)) != 0;
    t.match_count[i] =
        static_cast<std::uint16_t>(a.match_count[i] + b.match_count[i] - (root_matches ? 1 : 0));
    t.match_rep[i] = in_a ? a.match_rep[i] : b.match_rep[i];
  }
  t.matched = a.matched | b.matched;
  t.nodes.reserve(a.nodes.size() + b.nodes.size() - 1);
  std::set_union(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                 std::back_inserter(t.nodes));
  t.edges.reserve(a.edges.size() + b.edges.size());
  std::merge(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
             std::back_inserter(t.edges), key_less);
  t.conf_prod = a.conf_prod * b.conf_prod;
  t.spec_prod = a.spec_prod * b.spec_prod;
  if (!leaves_ok(matches, t)) return std::nullopt;
  return t;
}

std::vector<NodeId> nodes_of(std::span<const EdgeRef> edges, NodeId lone_node) {
  if (edges.empty()) return {lone_node};
  std::vector<NodeId> out;
  out.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    out.push_back(e.source);
    out.push_back(e.target);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_minimal_answer(const Graph& graph, const MatchTable& matches,
                       std::span<const EdgeRef> edges, std::span<const NodeId> nodes) {
  if (nodes.empty() || edges.size() + 1 != nodes.size()) return false;
  auto slot = [&](NodeId n) -> std::size_t {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    return it != nodes.end() && *it == n ? static_cast<std::size_t>(it - nodes.begin())
                                         : nodes.size();
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t s = slot(edges[k].source);
    const std::size_t t = slot(edges[k].target);
    if (s == nodes.size() || t == nodes.size() || s == t) return false;
    adj[s].push_back({t, k});
    adj[t].push_back({s, k});
  }

  // Depth-first order from node 0; reaching every node once means the edges
  // form a spanning tree.
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(nodes.size(), nodes.size());
  std::vector<bool> seen(nodes.size(), false);
  order.reserve(nodes.size());
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (const auto& [v, k] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      stack.push_back(v);
    }
  }
  if (order.size() != nodes.size()) return false;

  // below[u]: keywords matched in u's subtree; above[u]: everywhere else.
  std::vector<KeywordMask> below(nodes.size());
  for (std::size_t u = 0; u < nodes.size(); ++u) below[u] = matches.mask(nodes[u]);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != nodes.size()) below[parent[*it]] |= below[*it];
  }
  if (below[0] != matches.full()) return false;

  for (std::size_t i = 0; i < matches.size(); ++i) {
    NodeId rep = kNoNode;
    for (NodeId n : nodes) {
      if ((matches.mask(n) & (KeywordMask{1} << i)) == 0) continue;
      if (rep == kNoNode) {
        rep = graph.representative(n);
      } else if (graph.representative(n) != rep) {
        return false;
      }
    }
  }

  for (std::size_t u = 0; u < nodes.size(); ++u) {
    if (adj[u].size() == 1 && matches.mask(nodes[u]) == 0) return false;
  }

  // Removing the edge above u leaves below[u] and above[u]; neither side may
  // cover every keyword.
  std::vector<KeywordMask> above(nodes.size(), 0);
  std::vector<std::size_t> children;
  std::vector<KeywordMask> suffix;
  for (std::size_t u : order) {
    children.clear();
    for (const auto& [v, k] : adj[u]) {
      if (parent[v] == u) children.push_back(v);
    }
    suffix.assign(children.size() + 1, 0);
    for (std::size_t i = children.size(); i-- > 0;) suffix[i] = suffix[i + 1] | below[children[i]];
    KeywordMask prefix = above[u] | matches.mask(nodes[u]);
    for (std::size_t i = 0; i < children.size(); ++i) {
      const std::size_t c = children[i];
      above[c] = prefix | suffix[i + 1];
      if (below[c] == matches.full() || above[c] == matches.full()) return false;
      prefix |= below[c];
    }
  }
  return true;
}

std::vector<EdgeRef> postprocess(const Graph& graph, const MatchTable& matches,
                                 std::span<const EdgeRef> edges) {
  std::vector<EdgeRef> out(edges.begin(), edges.end());
  const std::vector<NodeId> nodes = nodes_of(edges, NodeId{});
  if (edges.empty()) return out;

  for (NodeId r : nodes) {
    if (graph.representative(r) != r) continue;
    std::vector<NodeId> neighbors;
    bool only_same_as = true;
    for (const EdgeRef& e : out) {
      if (!e.touches(r)) continue;
      if (e.kind != EdgeKind::SameAs) {
        only_same_as = false;
        break;
      }
      neighbors.push_back(e.other(r));
    }
    if (!only_same_as || neighbors.size() < 2) continue;

    KeywordMask elsewhere = 0;
    for (const EdgeRef& e : out) {
      if (e.touches(r)) continue;
      elsewhere |= matches.mask(e.source) | matches.mask(e.target);
    }
    for (NodeId n : neighbors) elsewhere |= matches.mask(n);
    if ((matches.mask(r) & ~elsewhere) != 0) continue;

    std::sort(neighbors.begin(), neighbors.end());
    std::erase_if(out, [&](const EdgeRef& e) { return e.touches(r); });
    for (std::size_t i = 0; i + 1 < neighbors.size(); ++i) {
      out.push_back(EdgeRef::same_as(neighbors[i], neighbors[i + 1]));
    }
  }
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

}  // namespace hetsearch
