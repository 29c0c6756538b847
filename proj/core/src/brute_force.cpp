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
#include <algorithm>
#include <map>
#include <set>

#include "hetsearch/error.hpp"
#include "hetsearch/search.hpp"

namespace hetsearch {

std::vector<std::vector<Answer>> brute_force_answers(const Graph& graph,
                                                     const std::vector<MatchTable>& matches,
                                                     std::size_t max_edges,
                                                     const ScoreParams& params,
                                                     std::size_t guard) {
  std::vector<EdgeRef> edges;
  for (const Edge& e : graph.edges()) {
    const EdgeRef ref = EdgeRef::stored(e);
    if (traversable(graph, ref)) edges.push_back(ref);
  }
  for (const Node& n : graph.nodes()) {
    if (n.rep != n.id) edges.push_back(EdgeRef::same_as(n.id, n.rep));
  }
  std::vector<std::vector<std::uint32_t>> incident(graph.node_count());
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].source.value].push_back(i);
    incident[edges[i].target.value].push_back(i);
  }

  std::vector<std::map<std::vector<EdgeKey>, Answer>> found(matches.size());
  auto consider = [&](const std::vector<EdgeRef>& tree, NodeId lone) {
    const std::vector<NodeId> nodes = nodes_of(tree, lone);
    for (std::size_t q = 0; q < matches.size(); ++q) {
      KeywordMask m = 0;
      for (NodeId n : nodes) m |= matches[q].mask(n);
      if (m != matches[q].full() || !is_minimal_answer(graph, matches[q], tree, nodes)) continue;
      Answer a = make_answer(graph, matches[q], tree, lone, params);
      found[q].emplace(a.key, std::move(a));
    }
  };

  std::set<NodeId> lone_matches;
  for (const MatchTable& m : matches) {
    for (NodeId n : m.matching_nodes()) lone_matches.insert(n);
  }
  for (NodeId n : lone_matches) consider({}, n);

  using Subset = std::vector<std::uint32_t>;
  std::set<Subset> seen;
  std::vector<Subset> level;
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (edges[i].source != edges[i].target) level.push_back({i});
  }
  if (max_edges == 0) level.clear();
  for (const auto& s : level) seen.insert(s);

  for (std::size_t size = 1; !level.empty(); ++size) {
    if (seen.size() > guard) throw Error("brute force: subtree guard exceeded");
    std::vector<Subset> next;
    for (const Subset& subset : level) {
      std::vector<EdgeRef> tree;
      tree.reserve(subset.size());
      for (std::uint32_t i : subset) tree.push_back(edges[i]);
      consider(tree, NodeId{});
      if (size >= max_edges) continue;

      const std::vector<NodeId> nodes = nodes_of(tree, NodeId{});
      for (NodeId n : nodes) {
        for (std::uint32_t i : incident[n.value]) {
          if (std::binary_search(subset.begin(), subset.end(), i)) continue;
          if (std::binary_search(nodes.begin(), nodes.end(), edges[i].other(n))) continue;
          Subset grown = subset;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
          if (seen.insert(grown).second) {
            next.push_back(std::move(grown));
            if (seen.size() > guard) throw Error("brute force: subtree guard exceeded");
          }
        }
      }
    }
    level = std::move(next);
  }

  std::vector<std::vector<Answer>> out(matches.size());
  for (std::size_t q = 0; q < matches.size(); ++q) {
    for (auto& [key, a] : found[q]) out[q].push_back(std::move(a));
  }
  return out;
}

std::vector<Answer> brute_force_answers(const Graph& graph, const MatchTable& matches,
                                        std::size_t max_edges, const ScoreParams& params,
                                        std::size_t guard) {
  return std::move(brute_force_answers(graph, std::vector<MatchTable>{matches}, max_edges, params,
                                       guard)[0]);
}

}  // namespace hetsearch
