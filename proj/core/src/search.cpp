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
#include "hetsearch/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hetsearch/link.hpp"

namespace hetsearch {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_limits(std::size_t k, std::size_t cap, const ScoreParams& params) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (cap < k) throw std::invalid_argument("max_answers must be at least k");
  params.validate();
}

struct TreeId {
  NodeId root;
  std::vector<EdgeKey> keys;
  bool operator==(const TreeId&) const = default;
};

struct TreeIdHash {
  std::size_t operator()(const TreeId& t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ t.root.value;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& k : t.keys) {
      mix(k.tag);
      mix(k.a);
      mix(k.b);
    }
    return static_cast<std::size_t>(h);
  }
};

struct Explored {
  PartialTree tree;
  std::vector<EdgeKey> keys;
};

using TreePtr = std::shared_ptr<const Explored>;

struct Entry {
  TreePtr tree;
  EdgeRef edge;
  Opportunity order;
};

struct EntryOrder {
  bool operator()(const Entry& a, const Entry& b) const {
    return explored_before(b.order, a.order);
  }
};

class GamRun {
 public:
  GamRun(const Graph& graph, const MatchTable& matches, const Query& query)
      : graph_(graph), matches_(matches), query_(query), cap_(query.answer_cap()) {}

  SearchResult run() {
    start_ = Clock::now();
    if (query_.timeout) deadline_ = start_ + *query_.timeout;

    std::vector<TreePtr> seeds;
    for (NodeId n : matches_.matching_nodes()) {
      if (auto t = process(seed_tree(graph_, matches_, n))) seeds.push_back(t);
      if (stopped()) return finish();
    }
    // Seeds merge pairwise; only those sharing a root can combine.
    for (std::size_t i = 0; i < seeds.size() && !stopped(); ++i) {
      for (std::size_t j = i + 1; j < seeds.size() && !stopped(); ++j) {
        if (auto m = merge(graph_, matches_, seeds[i]->tree, seeds[j]->tree)) process(std::move(*m));
      }
    }
    for (const auto& [root, trees] : by_root_) {
      for (const auto& t : trees) replenish(t);
    }

    while (!queue_.empty() && !stopped()) {
      Entry entry = queue_.top();
      queue_.pop();
      ++stats_.queue_pops;
      std::optional<PartialTree> next = apply(entry);
      if (!next) continue;
      TreePtr t = process(std::move(*next));
      if (!t) continue;
      std::vector<TreePtr> fresh{t};
      aggressive_merge(t, fresh);
      for (const auto& f : fresh) replenish(f);
    }
    return finish();
  }

 private:
  bool stopped() {
    if (answers_.size() >= cap_) {
      stats_.answer_cap_reached = true;
      return true;
    }
    if (deadline_ && Clock::now() >= *deadline_) {
      stats_.timed_out = true;
      return true;
    }
    return false;
  }

  std::optional<PartialTree> apply(const Entry& entry) const {
    const PartialTree& t = entry.tree->tree;
    if (entry.edge.kind != EdgeKind::SameAs) return grow(graph_, matches_, t, entry.edge);
    if (graph_.representative(t.root) != t.root) return grow_to_rep(graph_, matches_, t);
    return grow_from_rep(graph_, matches_, t, entry.edge.other(t.root));
  }

  // Records a tree. Returns it when it is new and may still be extended.
  TreePtr process(PartialTree tree) {
    TreeId id{tree.root, tree.edge_keys()};
    if (!explored_.insert(id).second) return nullptr;
    ++stats_.trees_explored;
    if (tree.matched == matches_.full()) {
      // The same edge set reached from another root gives the same answer.
      if (!full_edge_sets_.insert(id.keys).second) return nullptr;
      const std::vector<NodeId>& nodes = tree.nodes;
      if (is_minimal_answer(graph_, matches_, tree.edges, nodes)) {
        Answer a = make_answer(graph_, matches_, tree.edges, tree.root, query_.params);
        if (answer_keys_.insert(a.key).second) {
          if (answers_.empty()) stats_.time_first_ms = elapsed_ms(start_);
          answers_.push_back(std::move(a));
        }
      }
      return nullptr;
    }
    auto ptr = std::make_shared<const Explored>(Explored{std::move(tree), std::move(id.keys)});
    by_root_[ptr->tree.root].push_back(ptr);
    return ptr;
  }

  // Merges `seed` with every tree of the same root, then keeps merging the
  // results until nothing new appears.
  void aggressive_merge(const TreePtr& seed, std::vector<TreePtr>& fresh) {
    std::vector<TreePtr> work{seed};
    while (!work.empty() && !stopped()) {
      TreePtr x = work.back();
      work.pop_back();
      const auto& peers = by_root_[x->tree.root];
      for (std::size_t i = 0; i < peers.size() && !stopped(); ++i) {
        TreePtr y = peers[i];
        if (y == x) continue;
        auto m = merge(graph_, matches_, x->tree, y->tree);
        if (!m) continue;
        ++stats_.merges;
        if (TreePtr merged = process(std::move(*m))) {
          fresh.push_back(merged);
          work.push_back(merged);
        }
      }
    }
  }

  void push(const TreePtr& t, const EdgeRef& edge) {
    Entry e;
    e.tree = t;
    e.edge = edge;
    e.order.keywords = static_cast<std::size_t>(std::popcount(t->tree.matched));
    e.order.nodes = t->tree.node_count();
    e.order.specificity = factors(graph_, edge).specificity;
    e.order.tree_key = t->keys;
    e.order.edge = edge.key();
    e.order.root = t->tree.root;
    queue_.push(std::move(e));
  }

  void replenish(const TreePtr& t) {
    const PartialTree& tree = t->tree;
    const NodeId root = tree.root;
    for (const Neighbor& nb : graph_.neighbors(root)) {
      if (nb.edge.kind == EdgeKind::SameAs) continue;
      if (tree.contains(nb.other) || !traversable(graph_, nb.edge)) continue;
      push(t, nb.edge);
    }
    const NodeId rep = graph_.representative(root);
    if (rep != root) {
      if (!tree.contains(rep)) push(t, EdgeRef::same_as(root, rep));
      return;
    }
    for (NodeId member : graph_.equivalence_set(root)) {
      if (member != root && !tree.contains(member)) push(t, EdgeRef::same_as(member, root));
    }
  }

  SearchResult finish() {
    stats_.answers_found = answers_.size();
    stats_.time_total_ms = elapsed_ms(start_);
    SearchResult r;
    r.stats = stats_;
    std::sort(answers_.begin(), answers_.end(), better_answer);
    if (answers_.size() > query_.k) answers_.resize(query_.k);
    r.answers = std::move(answers_);
    return r;
  }

  const Graph& graph_;
  const MatchTable& matches_;
  const Query& query_;
  const std::size_t cap_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;

  std::priority_queue<Entry, std::vector<Entry>, EntryOrder> queue_;
  std::unordered_set<TreeId, TreeIdHash> explored_;
  std::unordered_map<NodeId, std::vector<TreePtr>> by_root_;
  std::vector<Answer> answers_;
  std::set<std::vector<EdgeKey>> answer_keys_;
  std::set<std::vector<EdgeKey>> full_edge_sets_;
  SearchStats stats_;
};

}  // namespace

bool explored_before(const Opportunity& a, const Opportunity& b) {
  if (a.keywords != b.keywords) return a.keywords > b.keywords;
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  if (a.specificity != b.specificity) return a.specificity > b.specificity;
  if (!std::equal(a.tree_key.begin(), a.tree_key.end(), b.tree_key.begin(), b.tree_key.end())) {
    return std::lexicographical_compare(a.tree_key.begin(), a.tree_key.end(), b.tree_key.begin(),
                                        b.tree_key.end());
  }
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.root < b.root;
}

std::size_t Query::answer_cap() const {
  if (max_answers) return *max_answers;
  if (k > kUnlimited / 10) return kUnlimited;
  return std::max<std::size_t>(100, 10 * k);
}

void Query::validate() const {
  if (keywords.empty() || keywords.size() > kMaxKeywords) {
    throw std::invalid_argument("a query needs between 1 and 16 keywords");
  }
  check_limits(k, answer_cap(), params);
}

NodeId Answer::primary_match(const Graph& graph, const std::vector<std::string>& keywords,
                             std::size_t i) const {
  const auto& list = matches.at(i);
  NodeId best = list.front();
  double best_sim = -1.0;
  for (NodeId n : list) {
    const double sim = label_similarity(graph.node(n).label, keywords.at(i));
    if (sim > best_sim) {
      best = n;
      best_sim = sim;
    }
  }
  return best;
}

Answer make_answer(const Graph& graph, const MatchTable& matches, std::span<const EdgeRef> edges,
                   NodeId lone_node, const ScoreParams& params) {
  Answer a;
  a.edges = postprocess(graph, matches, edges);
  a.nodes = nodes_of(a.edges, lone_node);
  a.key = canonical_key(a.edges, lone_node);
  a.matches.resize(matches.size());
  std::vector<std::vector<std::string>> labels(matches.size());
  for (NodeId n : a.nodes) {
    const KeywordMask m = matches.mask(n);
    for (std::size_t i = 0; i < matches.size(); ++i) {
      if ((m & (KeywordMask{1} << i)) == 0) continue;
      a.matches[i].push_back(n);
      labels[i].push_back(graph.node(n).label);
    }
  }
  const double ms = matching_score(matches.keywords(), labels);
  const auto [conf, spec] = connection_score(graph, a.edges);
  a.score = combine(ms, conf, spec, params);
  return a;
}

bool better_answer(const Answer& a, const Answer& b) {
  if (a.score.total != b.score.total) return a.score.total > b.score.total;
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.key < b.key;
}

SearchResult gam_search(const Graph& graph, const MatchTable& matches, const Query& query) {
  check_limits(query.k, query.answer_cap(), query.params);
  if (!matches.unmatched_keywords().empty()) {
    SearchResult r;
    for (std::size_t i : matches.unmatched_keywords()) {
      r.diagnostics.push_back("no node matches keyword '" + matches.keywords()[i] + "'");
    }
    return r;
  }
  return GamRun(graph, matches, query).run();
}

SearchResult gam_search(const IntegratedGraph& g, const Query& query) {
  query.validate();
  for (const auto& kw : query.keywords) {
    if (g.index.tokenizer().tokenize(kw).empty()) {
      throw std::invalid_argument("keyword '" + kw + "' has no searchable token");
    }
  }
  const MatchTable matches = MatchTable::build(g.graph, g.index, query.keywords);
  return gam_search(g.graph, matches, query);
}

}  // namespace hetsearch
