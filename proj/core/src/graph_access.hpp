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

#include "hetsearch/graph.hpp"

namespace hetsearch::detail {

/// Internal write access for the modules that maintain graph bookkeeping
/// (specificity, link, extract, persistence).
struct GraphAccess {
  using LabelGroup = Graph::LabelGroup;
  using LinkGroup = Graph::LinkGroup;
  using GroupKey = Graph::GroupKey;

  static Node& node(Graph& g, NodeId id) { return g.mutable_node(id); }
  static Edge& edge(Graph& g, EdgeId id) { return g.mutable_edge(id); }

  static LabelGroup& group(Graph& g, NodeId rep, const std::string& label) {
    return g.group(rep, label);
  }
  static const LabelGroup* find_group(const Graph& g, NodeId rep, const std::string& label) {
    const auto it = g.groups_.find(GroupKey{rep.value, label});
    return it == g.groups_.end() ? nullptr : &it->second;
  }
  static void erase_group(Graph& g, NodeId rep, const std::string& label) {
    g.groups_.erase(GroupKey{rep.value, label});
  }

  static auto& members(Graph& g) { return g.members_; }
  static auto& link_groups(Graph& g) { return g.link_groups_; }
  static const auto& link_groups(const Graph& g) { return g.link_groups_; }
  static auto& entity_nodes(Graph& g) { return g.entity_nodes_; }

  /// Appends a node or edge record verbatim (ids, rep and counters as given).
  /// Derived structures are rebuilt by rebuild_derived().
  static void push_node(Graph& g, Node node);
  static void push_edge(Graph& g, Edge edge);
  static void set_dataset_count(Graph& g, std::uint64_t n) { g.next_dataset_ = n; }

  /// Recomputes adjacency, equivalence members, label tallies, link groups,
  /// the entity lookup and similar pairs from the node and edge records.
  static void rebuild_derived(Graph& g);

  static std::string link_key(NodeKind kind, std::string_view label);
  static std::string entity_key(DatasetId dataset, NodeKind kind, std::string_view label);
};

}  // namespace hetsearch::detail
