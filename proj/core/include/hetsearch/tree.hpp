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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/index.hpp"

namespace hetsearch {

using KeywordMask = std::uint32_t;
inline constexpr std::size_t kMaxKeywords = 16;

/// Which nodes match which query keyword.
class MatchTable {
 public:
  /// Throws std::invalid_argument on zero or more than kMaxKeywords keywords.
  explicit MatchTable(std::vector<std::string> keywords);

  /// Index lookup for every keyword.
  static MatchTable build(const Graph& graph, const InvertedIndex& index,
                          std::vector<std::string> keywords);

  void add(std::size_t keyword, NodeId node);

  std::size_t size() const { return keywords_.size(); }
  const std::vector<std::string>& keywords() const { return keywords_; }
  KeywordMask full() const { return static_cast<KeywordMask>((std::uint64_t{1} << size()) - 1); }
  KeywordMask mask(NodeId node) const;

  /// Sorted node ids matching keyword i.
  std::span<const NodeId> matches(std::size_t keyword) const { return per_keyword_[keyword]; }

  /// Every node matching at least one keyword, sorted.
  std::vector<NodeId> matching_nodes() const;

  std::vector<std::size_t> unmatched_keywords() const;

 private:
  std::vector<std::string> keywords_;
  std::vector<std::vector<NodeId>> per_keyword_;
  std::unordered_map<NodeId, KeywordMask> masks_;
};

/// Search traverses no edge touching a do-not-link node.
bool traversable(const Graph& graph, const EdgeRef& edge);

/// Sorted identity of an edge set; a lone node is keyed by itself.
std::vector<EdgeKey> canonical_key(std::span<const EdgeRef> edges, NodeId lone_node);

/// A rooted tree under construction. Nodes are kept sorted by id and edges
/// by key, so equal trees compare equal field by field.
struct PartialTree {
  NodeId root;
  std::vector<NodeId> nodes;
  std::vector<EdgeRef> edges;
  KeywordMask matched = 0;
  std::vector<std::uint16_t> match_count;  // per keyword
  std::vector<NodeId> match_rep;           // per keyword, representative of the matches
  double conf_prod = 1.0;
  double spec_prod = 1.0;

  bool contains(NodeId n) const;
  std::vector<EdgeKey> edge_keys() const;
  std::size_t node_count() const { return nodes.size(); }
};

PartialTree seed_tree(const Graph& graph, const MatchTable& matches, NodeId node);

/// Adds `edge` (adjacent to the root) and moves the root to its other end.
/// Nullopt when the edge is not adjacent to the root, would close a cycle,
/// is not traversable, or the result breaks minimality: matches of one
/// keyword must be equivalent and every non-root leaf must be the only
/// match of some keyword.
std::optional<PartialTree> grow(const Graph& graph, const MatchTable& matches,
                                const PartialTree& tree, const EdgeRef& edge);

/// Root -> representative along a virtual sameAs edge. Nullopt when the root
/// represents itself or its representative is already in the tree.
std::optional<PartialTree> grow_to_rep(const Graph& graph, const MatchTable& matches,
                                       const PartialTree& tree);

/// Representative root -> one of its members along a virtual sameAs edge.
std::optional<PartialTree> grow_from_rep(const Graph& graph, const MatchTable& matches,
                                         const PartialTree& tree, NodeId member);

/// Union of two trees with the same root and otherwise disjoint nodes.
/// Keywords may be shared as long as the union still satisfies minimality.
std::optional<PartialTree> merge(const Graph& graph, const MatchTable& matches,
                                 const PartialTree& a, const PartialTree& b);

/// Full-coverage tree check: every keyword matched, matches of one keyword
/// pairwise equivalent, every leaf matches a keyword, and removing any edge
/// leaves no component covering all keywords.
bool is_minimal_answer(const Graph& graph, const MatchTable& matches,
                       std::span<const EdgeRef> edges, std::span<const NodeId> nodes);

/// Removes each representative whose tree edges are all sameAs (two or
/// more) and whose keywords are matched elsewhere in the tree, then chains
/// its tree neighbors in id order with sameAs edges. Edges come back sorted
/// by key.
std::vector<EdgeRef> postprocess(const Graph& graph, const MatchTable& matches,
                                 std::span<const EdgeRef> edges);

/// Nodes touched by the edges, sorted. For an empty edge set, {lone_node}.
std::vector<NodeId> nodes_of(std::span<const EdgeRef> edges, NodeId lone_node);

}  // namespace hetsearch
