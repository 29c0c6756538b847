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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hetsearch/ids.hpp"

namespace hetsearch {

enum class NodeKind : std::uint8_t {
  DatasetRoot,
  Internal,
  Value,
  Uri,
  Number,
  EntityPerson,
  EntityLocation,
  EntityOrganization,
  DoNotLink,
};

/// Persisted type name: "dataset", "internal", "value", "uri", "number",
/// "entity:person", "entity:location", "entity:organization", "do_not_link".
std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view name);

bool is_entity(NodeKind kind);

/// Kinds that take part in equivalence and similarity linking.
bool is_linkable(NodeKind kind);

enum class EdgeKind : std::uint8_t { Data, Similar, SameAs };

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> parse_edge_kind(std::string_view name);

struct Node {
  NodeId id;
  NodeKind kind = NodeKind::Value;
  std::string label;
  DatasetId dataset;
  NodeId rep;
  std::optional<std::string> path;
};

struct Edge {
  EdgeId id;
  NodeId source;
  NodeId target;
  std::string label;
  double confidence = 1.0;
  EdgeKind kind = EdgeKind::Data;
  std::uint64_t n_in = 0;
  std::uint64_t n_out = 0;
  double specificity = 1.0;
};

/// Total order over edge identities. Stored edges are keyed by id; virtual
/// sameAs edges by their unordered endpoint pair.
struct EdgeKey {
  std::uint8_t tag = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  auto operator<=>(const EdgeKey&) const = default;
};

/// An edge as it appears in an answer tree: either a stored Data/Similar edge
/// or a virtual sameAs edge between two equivalent nodes.
struct EdgeRef {
  EdgeKind kind = EdgeKind::Data;
  EdgeId id;  // meaningless for SameAs
  NodeId source;
  NodeId target;

  static EdgeRef stored(const Edge& e) { return {e.kind, e.id, e.source, e.target}; }
  static EdgeRef same_as(NodeId from, NodeId to) { return {EdgeKind::SameAs, EdgeId{}, from, to}; }

  EdgeKey key() const;
  NodeId other(NodeId n) const { return n == source ? target : source; }
  bool touches(NodeId n) const { return n == source || n == target; }
};

enum class Direction : std::uint8_t { Outgoing, Incoming };

struct Neighbor {
  EdgeRef edge;
  Direction direction;
  NodeId other;
};

struct LabelTally {
  std::uint64_t in = 0;
  std::uint64_t out = 0;
};

inline constexpr std::string_view kSameAsLabel = "sameAs";

namespace detail {
struct GraphAccess;
}

/// The integrated multigraph. Node and edge ids are dense and assigned in
/// registration order. Equivalence edges are never stored: each node keeps the
/// id of its representative and sameAs edges are synthesized by neighbors().
class Graph {
 public:
  DatasetId add_dataset();

  NodeId add_node(NodeKind kind, std::string label, DatasetId dataset,
                  std::optional<std::string> path = std::nullopt);

  /// Throws GraphError on unknown endpoints, self-loops, confidence outside
  /// [0,1], SameAs kind (virtual only) or a second Similar edge for a pair.
  /// Data edges get their specificity counters initialized on insertion.
  EdgeId add_edge(NodeId source, NodeId target, std::string label, double confidence,
                  EdgeKind kind = EdgeKind::Data);

  bool contains(NodeId id) const { return id.value < nodes_.size(); }
  bool contains(EdgeId id) const { return id.value < edges_.size(); }

  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dataset_count() const { return next_dataset_; }

  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId id) const;
  std::span<const EdgeId> in_edges(NodeId id) const;

  /// Stored edges in both orientations plus the virtual sameAs edges to the
  /// representative (or, for a representative, to every member).
  std::vector<Neighbor> neighbors(NodeId id) const;

  NodeId representative(NodeId id) const;
  bool equivalent(NodeId a, NodeId b) const { return representative(a) == representative(b); }

  /// Members of the equivalence set of `id`, sorted, representative included.
  std::vector<NodeId> equivalence_set(NodeId id) const;

  /// In/out counts of l-labeled Data edges summed over the set whose
  /// representative is `rep`.
  LabelTally tally(NodeId rep, std::string_view label) const;

  bool has_similar_edge(NodeId a, NodeId b) const;

  /// Relabels a node. Only meaningful before it is indexed or linked.
  void set_label(NodeId id, std::string label);

 private:
  friend struct detail::GraphAccess;

  struct GroupKey {
    std::uint64_t rep;
    std::string label;
    bool operator==(const GroupKey&) const = default;
  };
  struct GroupKeyHash {
    std::size_t operator()(const GroupKey& k) const noexcept;
  };
  /// Per (equivalence set, label) bookkeeping for specificity maintenance.
  struct LabelGroup {
    LabelTally tally;
    std::vector<EdgeId> in_edges;
    std::vector<EdgeId> out_edges;
  };
  /// Nodes sharing a cross-dataset label key.
  struct LinkGroup {
    std::vector<NodeId> nodes;
    bool joined = false;
  };

  Node& mutable_node(NodeId id);
  Edge& mutable_edge(EdgeId id);
  LabelGroup& group(NodeId rep, const std::string& label) { return groups_[GroupKey{rep.value, label}]; }

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<NodeId, std::vector<NodeId>> members_;  // only sets of size > 1
  std::unordered_map<GroupKey, LabelGroup, GroupKeyHash> groups_;
  std::unordered_map<std::string, LinkGroup> link_groups_;
  std::set<std::pair<std::uint64_t, std::uint64_t>> similar_pairs_;
  std::unordered_map<std::string, NodeId> entity_nodes_;  // dataset|kind|label
  std::uint64_t next_dataset_ = 0;
};

}  // namespace hetsearch
