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
#include "hetsearch/syngen.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetsearch/link.hpp"

namespace hetsearch::syngen {

namespace {

std::string interior(std::size_t i) { return "node" + std::to_string(i); }

IntegratedGraph finish(IntegratedGraph g) {
  g.index.rebuild(g.graph);
  return g;
}

IntegratedGraph path(std::size_t n, bool doubled) {
  if (n < 2) throw std::invalid_argument("a line needs at least 2 nodes");
  IntegratedGraph g;
  const DatasetId ds = g.graph.add_dataset();
  std::vector<NodeId> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string label = i == 1 ? kStartLabel : i == n ? kEndLabel : interior(i);
    v.push_back(g.graph.add_node(NodeKind::Value, label, ds));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (doubled) {
      g.graph.add_edge(v[i], v[i + 1], "a", 1.0);
      g.graph.add_edge(v[i], v[i + 1], "b", 1.0);
    } else {
      g.graph.add_edge(v[i], v[i + 1], "next", 1.0);
    }
  }
  return finish(std::move(g));
}

}  // namespace

IntegratedGraph line(std::size_t n) { return path(n, false); }

IntegratedGraph chain(std::size_t n) { return path(n, true); }

IntegratedGraph star(std::size_t branches, std::size_t branch_len) {
  if (branches < 2 || branch_len < 2) {
    throw std::invalid_argument("a star needs at least 2 branches of at least 2 nodes");
  }
  IntegratedGraph g;
  std::vector<NodeId> hubs;
  for (std::size_t b = 1; b <= branches; ++b) {
    const DatasetId ds = g.graph.add_dataset();
    NodeId prev = g.graph.add_node(NodeKind::Value, "hub", ds);
    hubs.push_back(prev);
    for (std::size_t i = 2; i <= branch_len; ++i) {
      const std::string label = i == branch_len ? "kw" + std::to_string(b)
                                                : "b" + std::to_string(b) + "n" + std::to_string(i);
      const NodeId next = g.graph.add_node(NodeKind::Value, label, ds);
      g.graph.add_edge(prev, next, "next", 1.0);
      prev = next;
    }
  }
  for (NodeId h : hubs) assign_representative(g.graph, h);
  return finish(std::move(g));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

IntegratedGraph barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed) {
  if (m0 < 2 || n <= m0) throw std::invalid_argument("need n > m0 >= 2");
  IntegratedGraph g;
  const DatasetId ds = g.graph.add_dataset();
  std::vector<NodeId> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(g.graph.add_node(NodeKind::Value, interior(i), ds));

  // Every edge contributes both endpoints, so a uniform pick from this list
  // is proportional to degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * n);
  for (std::size_t i = 0; i < m0; ++i) {
    const NodeId a = v[i];
    const NodeId b = v[(i + 1) % m0];
    g.graph.add_edge(a, b, "link", 1.0);
    endpoints.push_back(a);
    endpoints.push_back(b);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = m0; i < n; ++i) {
    const NodeId target = endpoints[uniform_below(rng, endpoints.size())];
    g.graph.add_edge(v[i], target, "link", 1.0);
    endpoints.push_back(v[i]);
    endpoints.push_back(target);
  }
  return finish(std::move(g));
}

std::optional<std::pair<NodeId, NodeId>> place_keywords_at_distance(IntegratedGraph& g,
                                                                   std::size_t distance) {
  const std::size_t n = g.graph.node_count();
  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    std::optional<std::size_t> hit;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (dist[u] == distance) {
        if (!hit || u < *hit) hit = u;
        continue;
      }
      for (const Neighbor& nb : g.graph.neighbors(NodeId{u})) {
        const std::size_t w = nb.other.value;
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    if (!hit || *hit == s) continue;
    const NodeId a{s};
    const NodeId b{*hit};
    g.graph.set_label(a, kStartLabel);
    g.graph.set_label(b, kEndLabel);
    g.index = InvertedIndex(g.index.tokenizer());
    g.index.rebuild(g.graph);
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace hetsearch::syngen
