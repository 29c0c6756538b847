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
#include "hetsearch/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "graph_access.hpp"
#include "hetsearch/error.hpp"
#include "hetsearch/specificity.hpp"
#include "hetsearch/text.hpp"

namespace hetsearch {

namespace {

constexpr std::array<std::string_view, 9> kNodeKindNames = {
    "dataset",         "internal",      "value",
    "uri",             "number",        "entity:person",
    "entity:location", "entity:organization", "do_not_link",
};

}  // namespace

std::string_view to_string(NodeKind kind) { return kNodeKindNames[static_cast<std::size_t>(kind)]; }

std::optional<NodeKind> parse_node_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNodeKindNames.size(); ++i) {
    if (kNodeKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

bool is_entity(NodeKind kind) {
  return kind == NodeKind::EntityPerson || kind == NodeKind::EntityLocation ||
         kind == NodeKind::EntityOrganization;
}

bool is_linkable(NodeKind kind) {
  return kind == NodeKind::Value || kind == NodeKind::Uri || kind == NodeKind::Number ||
         is_entity(kind);
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Data:
      return "data";
    case EdgeKind::Similar:
      return "similar";
    case EdgeKind::SameAs:
      return "sameas";
  }
  return "data";
}

std::optional<EdgeKind> parse_edge_kind(std::string_view name) {
  if (name == "data") return EdgeKind::Data;
  if (name == "similar") return EdgeKind::Similar;
  if (name == "sameas") return EdgeKind::SameAs;
  return std::nullopt;
}

EdgeKey EdgeRef::key() const {
  if (kind == EdgeKind::SameAs) {
    return {1, std::min(source, target).value, std::max(source, target).value};
  }
  return {0, id.value, 0};
}

std::size_t Graph::GroupKeyHash::operator()(const GroupKey& k) const noexcept {
  return std::hash<std::string>{}(k.label) * 31 + std::hash<std::uint64_t>{}(k.rep);
}

DatasetId Graph::add_dataset() { return DatasetId{next_dataset_++}; }

NodeId Graph::add_node(NodeKind kind, std::string label, DatasetId dataset,
                       std::optional<std::string> path) {
  if (dataset.value >= next_dataset_) {
    throw GraphError("unknown dataset " + std::to_string(dataset.value));
  }
  if (is_entity(kind) && label.empty()) {
    throw GraphError("entity nodes need a label");
  }
  const NodeId id{nodes_.size()};
  nodes_.push_back(Node{id, kind, std::move(label), dataset, id, std::move(path)});
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(NodeId source, NodeId target, std::string label, double confidence,
                       EdgeKind kind) {
  if (!contains(source) || !contains(target)) {
    throw GraphError("edge endpoint does not exist: " + std::to_string(source.value) + " -> " +
                     std::to_string(target.value));
  }
  if (source == target) {
    throw GraphError("self-loop on node " + std::to_string(source.value));
  }
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw GraphError("confidence out of [0,1]: " + std::to_string(confidence));
  }
  if (kind == EdgeKind::SameAs) {
    throw GraphError("sameAs edges are virtual and cannot be stored");
  }
  if (kind == EdgeKind::Similar) {
    if (has_similar_edge(source, target)) {
      throw GraphError("duplicate similar edge " + std::to_string(source.value) + " - " +
                       std::to_string(target.value));
    }
    similar_pairs_.emplace(std::min(source, target).value, std::max(source, target).value);
  }

  const EdgeId id{edges_.size()};
  Edge e{id, source, target, std::move(label), confidence, kind, 1, 1, 1.0};
  edges_.push_back(std::move(e));
  out_[source.value].push_back(id);
  in_[target.value].push_back(id);

  if (kind == EdgeKind::Data) {
    const std::string& l = edges_.back().label;
    LabelGroup& out_group = group(representative(source), l);
    ++out_group.tally.out;
    out_group.out_edges.push_back(id);
    LabelGroup& in_group = group(representative(target), l);
    ++in_group.tally.in;
    in_group.in_edges.push_back(id);
    init_specificity(*this, id);
  }
  return id;
}

const Node& Graph::node(NodeId id) const {
  if (!contains(id)) throw GraphError("unknown node " + std::to_string(id.value));
  return nodes_[id.value];
}

const Edge& Graph::edge(EdgeId id) const {
  if (!contains(id)) throw GraphError("unknown edge " + std::to_string(id.value));
  return edges_[id.value];
}

Node& Graph::mutable_node(NodeId id) {
  if (!contains(id)) throw GraphError("unknown node " + std::to_string(id.value));
  return nodes_[id.value];
}

Edge& Graph::mutable_edge(EdgeId id) {
  if (!contains(id)) throw GraphError("unknown edge " + std::to_string(id.value));
  return edges_[id.value];
}

std::span<const EdgeId> Graph::out_edges(NodeId id) const {
  node(id);
  return out_[id.value];
}

std::span<const EdgeId> Graph::in_edges(NodeId id) const {
  node(id);
  return in_[id.value];
}

std::vector<Neighbor> Graph::neighbors(NodeId id) const {
  const Node& n = node(id);
  std::vector<Neighbor> out;
  out.reserve(out_[id.value].size() + in_[id.value].size() + 1);
  for (EdgeId eid : out_[id.value]) {
    const Edge& e = edges_[eid.value];
    out.push_back({EdgeRef::stored(e), Direction::Outgoing, e.target});
  }
  for (EdgeId eid : in_[id.value]) {
    const Edge& e = edges_[eid.value];
    out.push_back({EdgeRef::stored(e), Direction::Incoming, e.source});
  }
  if (n.rep != id) {
    out.push_back({EdgeRef::same_as(id, n.rep), Direction::Outgoing, n.rep});
  } else if (const auto it = members_.find(id); it != members_.end()) {
    for (NodeId m : it->second) {
      if (m != id) out.push_back({EdgeRef::same_as(m, id), Direction::Incoming, m});
    }
  }
  return out;
}

NodeId Graph::representative(NodeId id) const { return node(id).rep; }

std::vector<NodeId> Graph::equivalence_set(NodeId id) const {
  const NodeId rep = representative(id);
  if (const auto it = members_.find(rep); it != members_.end()) return it->second;
  return {id};
}

LabelTally Graph::tally(NodeId rep, std::string_view label) const {
  const auto it = groups_.find(GroupKey{rep.value, std::string(label)});
  return it == groups_.end() ? LabelTally{} : it->second.tally;
}

bool Graph::has_similar_edge(NodeId a, NodeId b) const {
  return similar_pairs_.contains({std::min(a, b).value, std::max(a, b).value});
}

void Graph::set_label(NodeId id, std::string label) { mutable_node(id).label = std::move(label); }

namespace detail {

void GraphAccess::push_node(Graph& g, Node node) {
  if (node.id.value != g.nodes_.size()) {
    throw GraphError("node ids are not dense at id " + std::to_string(node.id.value));
  }
  g.nodes_.push_back(std::move(node));
  g.out_.emplace_back();
  g.in_.emplace_back();
}

void GraphAccess::push_edge(Graph& g, Edge edge) {
  if (edge.id.value != g.edges_.size()) {
    throw GraphError("edge ids are not dense at id " + std::to_string(edge.id.value));
  }
  if (!g.contains(edge.source) || !g.contains(edge.target)) {
    throw GraphError("edge " + std::to_string(edge.id.value) + " has a dangling endpoint");
  }
  g.edges_.push_back(std::move(edge));
}

std::string GraphAccess::link_key(NodeKind kind, std::string_view label) {
  std::string key(to_string(kind));
  key += '\x1f';
  key += text::nfc(label);
  return key;
}

std::string GraphAccess::entity_key(DatasetId dataset, NodeKind kind, std::string_view label) {
  std::string key = std::to_string(dataset.value);
  key += '\x1f';
  key += to_string(kind);
  key += '\x1f';
  key += text::normalize(label);
  return key;
}

void GraphAccess::rebuild_derived(Graph& g) {
  for (auto& v : g.out_) v.clear();
  for (auto& v : g.in_) v.clear();
  g.members_.clear();
  g.groups_.clear();
  g.link_groups_.clear();
  g.similar_pairs_.clear();
  g.entity_nodes_.clear();

  for (const Node& n : g.nodes_) {
    if (!g.contains(n.rep)) {
      throw GraphError("node " + std::to_string(n.id.value) + " has a dangling representative");
    }
    if (n.dataset.value >= g.next_dataset_) g.next_dataset_ = n.dataset.value + 1;
  }
  for (const Node& n : g.nodes_) {
    if (g.nodes_[n.rep.value].rep != n.rep) {
      throw GraphError("representative of node " + std::to_string(n.id.value) + " is not flat");
    }
    if (n.rep != n.id) {
      auto& members = g.members_[n.rep];
      if (members.empty()) members.push_back(n.rep);
      members.push_back(n.id);
    }
    if (is_linkable(n.kind) && !n.label.empty()) {
      auto& lg = g.link_groups_[link_key(n.kind, n.label)];
      lg.nodes.push_back(n.id);
      if (n.rep != n.id) lg.joined = true;
    }
    if (is_entity(n.kind)) {
      g.entity_nodes_.emplace(entity_key(n.dataset, n.kind, n.label), n.id);
    }
  }
  for (auto& [rep, members] : g.members_) std::sort(members.begin(), members.end());

  for (const Edge& e : g.edges_) {
    g.out_[e.source.value].push_back(e.id);
    g.in_[e.target.value].push_back(e.id);
    if (e.kind == EdgeKind::Similar) {
      g.similar_pairs_.emplace(std::min(e.source, e.target).value,
                               std::max(e.source, e.target).value);
    } else if (e.kind == EdgeKind::Data) {
      auto& out_group = g.group(g.nodes_[e.source.value].rep, e.label);
      ++out_group.tally.out;
      out_group.out_edges.push_back(e.id);
      auto& in_group = g.group(g.nodes_[e.target.value].rep, e.label);
      ++in_group.tally.in;
      in_group.in_edges.push_back(e.id);
    }
  }
}

}  // namespace detail

}  // namespace hetsearch
