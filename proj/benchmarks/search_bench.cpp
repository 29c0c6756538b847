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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hetsearch/index.hpp"
#include "hetsearch/link.hpp"
#include "hetsearch/search.hpp"
#include "hetsearch/specificity.hpp"
#include "hetsearch/syngen.hpp"

namespace hetsearch {
namespace {

Query all_answers(std::vector<std::string> keywords) {
  Query q;
  q.keywords = std::move(keywords);
  q.k = kUnlimited;
  return q;
}

void report(benchmark::State& state, const SearchResult& r) {
  state.counters["answers"] = static_cast<double>(r.stats.answers_found);
  state.counters["trees"] = static_cast<double>(r.stats.trees_explored);
  state.counters["first_ms"] = r.stats.time_first_ms;
}

void BM_LineSearch(benchmark::State& state) {
  const auto g = syngen::line(static_cast<std::size_t>(state.range(0)));
  const Query q = all_answers({syngen::kStartLabel, syngen::kEndLabel});
  SearchResult r;
  for (auto _ : state) {
    r = gam_search(g, q);
    benchmark::DoNotOptimize(r.answers.data());
  }
  report(state, r);
}
BENCHMARK(BM_LineSearch)->Arg(10)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ChainSearch(benchmark::State& state) {
  const auto g = syngen::chain(static_cast<std::size_t>(state.range(0)));
  const Query q = all_answers({syngen::kStartLabel, syngen::kEndLabel});
  SearchResult r;
  for (auto _ : state) {
    r = gam_search(g, q);
    benchmark::DoNotOptimize(r.answers.data());
  }
  report(state, r);
}
BENCHMARK(BM_ChainSearch)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_StarSearch(benchmark::State& state) {
  const auto g = syngen::star(static_cast<std::size_t>(state.range(0)), 10);
  const Query q = all_answers({"kw1", "kw2"});
  SearchResult r;
  for (auto _ : state) {
    r = gam_search(g, q);
    benchmark::DoNotOptimize(r.answers.data());
  }
  report(state, r);
}
BENCHMARK(BM_StarSearch)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

void BM_BarabasiAlbertSearch(benchmark::State& state) {
  auto g = syngen::barabasi_albert(2000, 2, 7);
  if (!syngen::place_keywords_at_distance(g, static_cast<std::size_t>(state.range(0)))) {
    state.SkipWithError("no pair at that distance");
    return;
  }
  Query q;
  q.keywords = {syngen::kStartLabel, syngen::kEndLabel};
  q.k = 10;
  SearchResult r;
  for (auto _ : state) {
    r = gam_search(g, q);
    benchmark::DoNotOptimize(r.answers.data());
  }
  report(state, r);
}
BENCHMARK(BM_BarabasiAlbertSearch)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

// Joining two large label groups updates every edge into either side.
void BM_SpecificityJoin(benchmark::State& state) {
  const auto fan_in = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    Graph g;
    NodeId hubs[2];
    for (NodeId& hub : hubs) {
      const DatasetId ds = g.add_dataset();
      hub = g.add_node(NodeKind::Value, "hub", ds);
      for (std::size_t i = 0; i < fan_in; ++i) {
        g.add_edge(g.add_node(NodeKind::Value, "n" + std::to_string(i), ds), hub, "to", 1.0);
      }
    }
    assign_representative(g, hubs[0]);
    state.ResumeTiming();
    benchmark::DoNotOptimize(assign_representative(g, hubs[1]));
  }
}
BENCHMARK(BM_SpecificityJoin)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Tokenize(benchmark::State& state) {
  const Tokenizer t;
  const std::string label =
      "Areva signed a uranium deal in Centrafrique with the officials of Levallois-Perret.";
  for (auto _ : state) benchmark::DoNotOptimize(t.tokenize(label));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * label.size()));
}
BENCHMARK(BM_Tokenize);

}  // namespace
}  // namespace hetsearch

BENCHMARK_MAIN();
