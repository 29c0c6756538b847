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

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/score.hpp"
#include "hetsearch/store.hpp"
#include "hetsearch/tree.hpp"

namespace hetsearch {

inline constexpr std::chrono::milliseconds kDefaultTimeout{120000};
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct Query {
  std::vector<std::string> keywords;
  std::size_t k = 10;
  /// Nullopt disables the timeout.
  std::optional<std::chrono::milliseconds> timeout = kDefaultTimeout;
  /// Stop after this many answers; defaults to max(100, 10k).
  std::optional<std::size_t> max_answers;
  ScoreParams params;

  std::size_t answer_cap() const;

  /// Throws std::invalid_argument on bad sizes or weights.
  void validate() const;
};

struct Answer {
  std::vector<EdgeRef> edges;                // post-processed, sorted by key
  std::vector<NodeId> nodes;                 // sorted
  std::vector<std::vector<NodeId>> matches;  // per keyword, sorted
  ScoreBreakdown score;
  std::vector<EdgeKey> key;                  // identity, no root

  /// The best-scoring match of keyword i (smallest id on ties).
  NodeId primary_match(const Graph& graph, const std::vector<std::string>& keywords,
                       std::size_t i) const;
};

struct SearchStats {
  std::size_t trees_explored = 0;  // distinct rooted trees processed
  std::size_t answers_found = 0;
  std::size_t queue_pops = 0;
  std::size_t merges = 0;  // successful merges
  double time_first_ms = 0.0;
  double time_total_ms = 0.0;
  bool timed_out = false;
  bool answer_cap_reached = false;
};

struct SearchResult {
  std::vector<Answer> answers;  // best first, at most k
  SearchStats stats;
  std::vector<std::string> diagnostics;
};

/// Ordering key of a (tree, candidate edge) pair in the exploration queue.
struct Opportunity {
  std::size_t keywords = 0;  // keywords the tree matches
  std::size_t nodes = 0;     // tree size
  double specificity = 1.0;  // of the candidate edge
  std::span<const EdgeKey> tree_key;
  EdgeKey edge;
  NodeId root;
};

/// More keywords first, then fewer nodes, then the more specific edge, then
/// tree key, edge key and root in ascending order.
bool explored_before(const Opportunity& a, const Opportunity& b);

/// Builds the answer for a full-coverage minimal tree: post-processing,
/// matches and score.
Answer make_answer(const Graph& graph, const MatchTable& matches, std::span<const EdgeRef> edges,
                   NodeId lone_node, const ScoreParams& params);

/// Higher total first, then fewer edges, then key.
bool better_answer(const Answer& a, const Answer& b);

/// Grow and aggressive merge over the given matches.
SearchResult gam_search(const Graph& graph, const MatchTable& matches, const Query& query);

/// Looks the keywords up in the index first. Keywords without a match yield
/// an empty result with one diagnostic per keyword.
SearchResult gam_search(const IntegratedGraph& g, const Query& query);

/// Every minimal answer with at most `max_edges` edges, found by enumerating
/// connected acyclic edge subsets, post-processed and deduplicated. Sorted
/// by key. Throws Error when more than `guard` subtrees are enumerated.
std::vector<Answer> brute_force_answers(const Graph& graph, const MatchTable& matches,
                                        std::size_t max_edges,
                                        const ScoreParams& params = {},
                                        std::size_t guard = std::size_t{1} << 20);

/// Same as above for several match tables over one graph; the subtrees are
/// enumerated once. Result i belongs to `matches[i]`.
std::vector<std::vector<Answer>> brute_force_answers(const Graph& graph,
                                                     const std::vector<MatchTable>& matches,
                                                     std::size_t max_edges,
                                                     const ScoreParams& params = {},
                                                     std::size_t guard = std::size_t{1} << 20);

}  // namespace hetsearch
