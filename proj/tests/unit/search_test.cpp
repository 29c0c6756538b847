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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "hetsearch/syngen.hpp"

namespace hetsearch {
namespace {

Query unlimited(std::vector<std::string> keywords) {
  Query q;
  q.keywords = std::move(keywords);
  q.k = kUnlimited;
  q.max_answers = kUnlimited;
  q.timeout.reset();
  return q;
}

std::set<std::vector<EdgeKey>> keys_of(const std::vector<Answer>& answers) {
  std::set<std::vector<EdgeKey>> out;
  for (const auto& a : answers) out.insert(a.key);
  return out;
}

std::size_t longest_same_as_group(const Answer& a) {
  // Size of the largest connected group of sameAs edges.
  std::vector<EdgeRef> same;
  for (const auto& e : a.edges) {
    if (e.kind == EdgeKind::SameAs) same.push_back(e);
  }
  std::size_t best = 0;
  std::vector<bool> used(same.size(), false);
  for (std::size_t i = 0; i < same.size(); ++i) {
    if (used[i]) continue;
    std::set<NodeId> nodes{same[i].source, same[i].target};
    used[i] = true;
    std::size_t count = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < same.size(); ++j) {
        if (used[j] || (!nodes.contains(same[j].source) && !nodes.contains(same[j].target))) continue;
        used[j] = true;
        nodes.insert(same[j].source);
        nodes.insert(same[j].target);
        ++count;
        grew = true;
      }
    }
    best = std::max(best, count);
  }
  return best;
}

TEST(SearchTest, OneKeywordGivesEveryMatchAlone) {
  IntegratedGraph g = fixtures::example_graph();
  const auto r = gam_search(g, unlimited({"balkany"}));
  const MatchTable m = MatchTable::build(g.graph, g.index, {"balkany"});
  ASSERT_EQ(r.answers.size(), m.matches(0).size());
  for (const auto& a : r.answers) {
    EXPECT_TRUE(a.edges.empty());
    ASSERT_EQ(a.nodes.size(), 1u);
  }
}

TEST(SearchTest, LineEndpointsGiveTheWholePath) {
  for (std::size_t n : {2u, 3u, 10u, 50u}) {
    IntegratedGraph g = syngen::line(n);
    const auto r = gam_search(g, unlimited({"kwstart", "kwend"}));
    ASSERT_EQ(r.answers.size(), 1u) << n;
    EXPECT_EQ(r.answers[0].edges.size(), n - 1);
  }
}

TEST(SearchTest, ChainAnswersDoublePerHop) {
  for (std::size_t n = 2; n <= 6; ++n) {
    IntegratedGraph g = syngen::chain(n);
    const auto r = gam_search(g, unlimited({"kwstart", "kwend"}));
    EXPECT_EQ(r.answers.size(), std::size_t{1} << (n - 1)) << n;
    const MatchTable m = MatchTable::build(g.graph, g.index, {"kwstart", "kwend"});
    EXPECT_EQ(keys_of(r.answers), keys_of(brute_force_answers(g.graph, m, n)));
  }
}

TEST(SearchTest, ChainOfThreeHasFourAnswers) {
  IntegratedGraph g = syngen::chain(3);
  EXPECT_EQ(gam_search(g, unlimited({"kwstart", "kwend"})).answers.size(), 4u);
}

TEST(SearchTest, AgreesWithBruteForceOnSmallScaleFreeGraphs) {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t n = 5 + seed % 8;
    IntegratedGraph g = syngen::barabasi_albert(n, 2, seed);
    for (std::size_t q = 0; q < 4; ++q) {
      const std::size_t kwc = 2 + q % 2;
      std::vector<std::string> kws;
      while (kws.size() < kwc) {
        const std::string kw = "node" + std::to_string(1 + syngen::uniform_below(rng, n));
        if (std::find(kws.begin(), kws.end(), kw) == kws.end()) kws.push_back(kw);
      }
      const MatchTable m = MatchTable::build(g.graph, g.index, kws);
      const auto expected = brute_force_answers(g.graph, m, g.graph.node_count());
      const auto got = gam_search(g.graph, m, unlimited(kws));
      EXPECT_EQ(keys_of(got.answers), keys_of(expected)) << "seed " << seed << " q " << q;
    }
  }
}

TEST(SearchTest, BatchedBruteForceMatchesSingleQueries) {
  const IntegratedGraph g = syngen::barabasi_albert(9, 2, 3);
  std::vector<MatchTable> tables;
  for (const auto& kws : std::vector<std::vector<std::string>>{
           {"node1", "node5"}, {"node2", "node9", "node4"}, {"node7"}}) {
    tables.push_back(MatchTable::build(g.graph, g.index, kws));
  }
  const auto batched = brute_force_answers(g.graph, tables, g.graph.node_count());
  ASSERT_EQ(batched.size(), tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    EXPECT_EQ(keys_of(batched[i]),
              keys_of(brute_force_answers(g.graph, tables[i], g.graph.node_count())))
        << i;
  }
}

TEST(SearchTest, AgreesWithBruteForceAcrossEquivalences) {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto f = fixtures::equivalence_star(k);
    const MatchTable m = MatchTable::build(f.g.graph, f.g.index, f.keywords);
    const auto expected = brute_force_answers(f.g.graph, m, f.g.graph.node_count());
    const auto got = gam_search(f.g.graph, m, unlimited(f.keywords));
    EXPECT_EQ(keys_of(got.answers), keys_of(expected)) << k;
  }
}

TEST(SearchTest, EquivalenceStarNeedsKMinusOneSameAsEdges) {
  for (std::size_t k = 3; k <= 5; ++k) {
    auto f = fixtures::equivalence_star(k);
    const auto r = gam_search(f.g, unlimited(f.keywords));
    ASSERT_FALSE(r.answers.empty());
    const bool found = std::any_of(r.answers.begin(), r.answers.end(),
                                   [&](const Answer& a) { return longest_same_as_group(a) == k - 1; });
    EXPECT_TRUE(found) << k;
    for (const auto& a : r.answers) EXPECT_LE(longest_same_as_group(a), k - 1);
  }
}

TEST(SearchTest, RepresentativeOnlyLinkedBySameAsIsRemoved) {
  // Query without a1: x1 only joins the other x nodes, so it is dropped.
  auto f = fixtures::equivalence_star(4);
  const auto r = gam_search(f.g, unlimited({"a2", "a3", "a4"}));
  ASSERT_FALSE(r.answers.empty());
  for (const auto& a : r.answers) {
    EXPECT_FALSE(std::binary_search(a.nodes.begin(), a.nodes.end(), f.x[0]));
    EXPECT_EQ(longest_same_as_group(a), 2u);
  }
}

TEST(SearchTest, StarAnswersCrossTheHub) {
  for (std::size_t b = 2; b <= 4; ++b) {
    IntegratedGraph g = syngen::star(b, 4);
    const auto r = gam_search(g, unlimited({"kw1", "kw2"}));
    ASSERT_EQ(r.answers.size(), 1u);
    const auto& a = r.answers[0];
    EXPECT_EQ(std::count_if(a.edges.begin(), a.edges.end(),
                            [](const EdgeRef& e) { return e.kind == EdgeKind::SameAs; }),
              1);
  }
}

TEST(SearchTest, ExampleGraphAgreesWithBruteForce) {
  IntegratedGraph g = fixtures::example_graph();
  const std::vector<std::vector<std::string>> queries = {
      {"balkany", "africa"}, {"gyucy", "balkany", "levallois"}, {"estate", "africa"},
      {"balkany", "africa", "estate"}, {"areva", "marrakech"}};
  for (const auto& kws : queries) {
    const MatchTable m = MatchTable::build(g.graph, g.index, kws);
    if (!m.unmatched_keywords().empty()) continue;
    const auto expected = brute_force_answers(g.graph, m, g.graph.node_count());
    const auto got = gam_search(g.graph, m, unlimited(kws));
    EXPECT_EQ(keys_of(got.answers), keys_of(expected)) << kws[0] << " " << kws[1];
  }
}

TEST(SearchTest, ExampleQueryConnectsDatasets) {
  IntegratedGraph g = fixtures::example_graph();
  Query q = unlimited({"I. Balkany", "Africa", "Estate"});
  q.k = 5;
  const auto r = gam_search(g, q);
  ASSERT_FALSE(r.answers.empty());
  std::set<std::uint64_t> datasets;
  for (NodeId n : r.answers[0].nodes) datasets.insert(g.graph.node(n).dataset.value);
  EXPECT_GE(datasets.size(), 2u);
  for (std::size_t i = 1; i < r.answers.size(); ++i) {
    EXPECT_FALSE(better_answer(r.answers[i], r.answers[i - 1]));
  }
}

TEST(SearchTest, DeterministicAcrossRuns) {
  IntegratedGraph g = syngen::barabasi_albert(40, 2, 9);
  syngen::place_keywords_at_distance(g, 4);
  const auto a = gam_search(g, unlimited({"kwstart", "kwend"}));
  const auto b = gam_search(g, unlimited({"kwstart", "kwend"}));
  ASSERT_EQ(a.answers.size(), b.answers.size());
  for (std::size_t i = 0; i < a.answers.size(); ++i) EXPECT_EQ(a.answers[i].key, b.answers[i].key);
  EXPECT_EQ(a.stats.trees_explored, b.stats.trees_explored);
}

TEST(SearchTest, TimeoutGivesSubsetOfFullResult) {
  IntegratedGraph g = syngen::chain(8);
  const auto full = keys_of(gam_search(g, unlimited({"kwstart", "kwend"})).answers);
  Query q = unlimited({"kwstart", "kwend"});
  q.timeout = std::chrono::milliseconds(0);
  const auto r = gam_search(g, q);
  EXPECT_TRUE(r.stats.timed_out);
  for (const auto& a : r.answers) EXPECT_TRUE(full.contains(a.key));
}

TEST(SearchTest, AnswerCapStopsEarly) {
  IntegratedGraph g = syngen::chain(6);
  Query q = unlimited({"kwstart", "kwend"});
  q.k = 3;
  q.max_answers = 5;
  const auto r = gam_search(g, q);
  EXPECT_TRUE(r.stats.answer_cap_reached);
  EXPECT_EQ(r.stats.answers_found, 5u);
  EXPECT_EQ(r.answers.size(), 3u);
}

TEST(SearchTest, UnmatchedKeywordIsADiagnostic) {
  IntegratedGraph g = syngen::line(5);
  const auto r = gam_search(g, unlimited({"kwstart", "nowhere"}));
  EXPECT_TRUE(r.answers.empty());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("nowhere"), std::string::npos);
}

TEST(SearchTest, RejectsBadQueries) {
  IntegratedGraph g = syngen::line(3);
  EXPECT_THROW(gam_search(g, unlimited({})), std::invalid_argument);
  EXPECT_THROW(gam_search(g, unlimited({"the"})), std::invalid_argument);
  Query q = unlimited({"kwstart"});
  q.k = 0;
  EXPECT_THROW(gam_search(g, q), std::invalid_argument);
  q = unlimited({"kwstart"});
  q.params.alpha = 0.7;
  q.params.beta = 0.5;
  EXPECT_THROW(gam_search(g, q), std::invalid_argument);
  q = unlimited({"kwstart"});
  q.k = 10;
  q.max_answers = 5;
  EXPECT_THROW(gam_search(g, q), std::invalid_argument);
  EXPECT_THROW(gam_search(g, unlimited(std::vector<std::string>(17, "kwstart"))),
               std::invalid_argument);
}

TEST(SearchTest, DefaultAnswerCap) {
  Query q;
  q.k = 3;
  EXPECT_EQ(q.answer_cap(), 100u);
  q.k = 20;
  EXPECT_EQ(q.answer_cap(), 200u);
  EXPECT_EQ(q.timeout, kDefaultTimeout);
}

TEST(SearchTest, LineExploresLinearlyManyTrees) {
  for (std::size_t n : {10u, 100u}) {
    IntegratedGraph g = syngen::line(n);
    const auto r = gam_search(g, unlimited({"kwstart", "kwend"}));
    EXPECT_LE(r.stats.trees_explored, 4 * n);
  }
}

TEST(PriorityTest, MoreKeywordsFirst) {
  const std::vector<EdgeKey> small{{0, 1, 0}};
  const std::vector<EdgeKey> big{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}};
  Opportunity two{2, 5, 0.1, big, {0, 9, 0}, NodeId{1}};
  Opportunity one{1, 2, 1.0, small, {0, 5, 0}, NodeId{1}};
  EXPECT_TRUE(explored_before(two, one));
  EXPECT_FALSE(explored_before(one, two));
}

TEST(PriorityTest, SmallerTreeThenSpecificEdge) {
  const std::vector<EdgeKey> k3{{0, 1, 0}, {0, 2, 0}};
  const std::vector<EdgeKey> k5{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}};
  Opportunity three{1, 3, 0.2, k3, {0, 7, 0}, NodeId{0}};
  Opportunity five{1, 5, 1.0, k5, {0, 7, 0}, NodeId{0}};
  EXPECT_TRUE(explored_before(three, five));
  Opportunity specific = three;
  specific.specificity = 0.9;
  EXPECT_TRUE(explored_before(specific, three));
}

TEST(PriorityTest, FullTieIsBrokenByIds) {
  const std::vector<EdgeKey> k{{0, 1, 0}};
  Opportunity a{1, 2, 1.0, k, {0, 3, 0}, NodeId{0}};
  Opportunity b{1, 2, 1.0, k, {0, 4, 0}, NodeId{0}};
  EXPECT_TRUE(explored_before(a, b));
  EXPECT_FALSE(explored_before(b, a));
  EXPECT_FALSE(explored_before(a, a));
}

}  // namespace
}  // namespace hetsearch
