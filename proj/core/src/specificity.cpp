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
#include "hetsearch/specificity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graph_access.hpp"
#include "hetsearch/error.hpp"

namespace hetsearch {

using detail::GraphAccess;

namespace {

void refresh(Edge& e) { e.specificity = specificity_value(e.n_out, e.n_in); }

}  // namespace

void init_specificity(Graph& graph, EdgeId id) {
  const Edge& e = graph.edge(id);
  if (e.kind != EdgeKind::Data) {
    Edge& m = GraphAccess::edge(graph, id);
    m.n_in = m.n_out = 1;
    m.specificity = 1.0;
    return;
  }
  const std::string label = e.label;
  const NodeId src_rep = graph.representative(e.source);
  const NodeId tgt_rep = graph.representative(e.target);
  const auto& out_group = GraphAccess::group(graph, src_rep, label);
  for (EdgeId sibling : out_group.out_edges) {
    Edge& s = GraphAccess::edge(graph, sibling);
    s.n_out = out_group.tally.out;
    refresh(s);
  }
  const auto& in_group = GraphAccess::group(graph, tgt_rep, label);
  for (EdgeId sibling : in_group.in_edges) {
    Edge& s = GraphAccess::edge(graph, sibling);
    s.n_in = in_group.tally.in;
    refresh(s);
  }
}

std::vector<EdgeId> on_equiv_join(Graph& graph, NodeId rep, NodeId n2) {
  if (graph.representative(rep) != rep) {
    throw GraphError("node " + std::to_string(rep.value) + " is not a representative");
  }
  if (rep == n2) return {};
  if (graph.representative(n2) != n2 || graph.equivalence_set(n2).size() != 1) {
    throw GraphError("node " + std::to_string(n2.value) + " already belongs to a set");
  }

  // Labels of n2's Data edges, per direction.
  std::set<std::string> in_labels;
  std::set<std::string> out_labels;
  for (EdgeId id : graph.in_edges(n2)) {
    if (graph.edge(id).kind == EdgeKind::Data) in_labels.insert(graph.edge(id).label);
  }
  for (EdgeId id : graph.out_edges(n2)) {
    if (graph.edge(id).kind == EdgeKind::Data) out_labels.insert(graph.edge(id).label);
  }

  GraphAccess::node(graph, n2).rep = rep;
  auto& members = GraphAccess::members(graph)[rep];
  if (members.empty()) members.push_back(rep);
  members.insert(std::upper_bound(members.begin(), members.end(), n2), n2);

  std::set<EdgeId> changed;
  auto bump = [&](EdgeId id, bool incoming, std::uint64_t delta) {
    Edge& e = GraphAccess::edge(graph, id);
    (incoming ? e.n_in : e.n_out) += delta;
    const double before = e.specificity;
    refresh(e);
    if (e.specificity != before) changed.insert(id);
  };

  for (const std::string& l : in_labels) {
    auto joining = GraphAccess::group(graph, n2, l);
    GraphAccess::erase_group(graph, n2, l);
    auto& set_group = GraphAccess::group(graph, rep, l);
    const std::uint64_t in_set = set_group.tally.in;
    const std::uint64_t in_n2 = joining.tally.in;
    if (in_set != 0 && in_n2 != 0) {
      for (EdgeId id : set_group.in_edges) bump(id, true, in_n2);
      for (EdgeId id : joining.in_edges) bump(id, true, in_set);
    }
    set_group.tally.in += in_n2;
    set_group.in_edges.insert(set_group.in_edges.end(), joining.in_edges.begin(),
                              joining.in_edges.end());
    if (!out_labels.contains(l)) continue;
    // Same label both ways: the outgoing half is merged below from the
    // remaining copy, so put it back.
    auto& back = GraphAccess::group(graph, n2, l);
    back.tally.out = joining.tally.out;
    back.out_edges = std::move(joining.out_edges);
  }
  for (const std::string& l : out_labels) {
    auto joining = GraphAccess::group(graph, n2, l);
    GraphAccess::erase_group(graph, n2, l);
    auto& set_group = GraphAccess::group(graph, rep, l);
    const std::uint64_t out_set = set_group.tally.out;
    const std::uint64_t out_n2 = joining.tally.out;
    if (out_set != 0 && out_n2 != 0) {
      for (EdgeId id : set_group.out_edges) bump(id, false, out_n2);
      for (EdgeId id : joining.out_edges) bump(id, false, out_set);
    }
    set_group.tally.out += out_n2;
    set_group.out_edges.insert(set_group.out_edges.end(), joining.out_edges.begin(),
                               joining.out_edges.end());
  }
  return {changed.begin(), changed.end()};
}

double specificity_naive(const Graph& graph, EdgeId id) {
  const Edge& e = graph.edge(id);
  if (e.kind != EdgeKind::Data) return 1.0;
  const NodeId src_rep = graph.node(e.source).rep;
  const NodeId tgt_rep = graph.node(e.target).rep;
  std::uint64_t out = 0;
  std::uint64_t in = 0;
  for (const Edge& other : graph.edges()) {
    if (other.kind != EdgeKind::Data || other.label != e.label) continue;
    if (graph.node(other.source).rep == src_rep) ++out;
    if (graph.node(other.target).rep == tgt_rep) ++in;
  }
  return specificity_value(out, in);
}

}  // namespace hetsearch
