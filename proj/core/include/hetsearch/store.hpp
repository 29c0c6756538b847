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

#include <filesystem>
#include <iosfwd>

#include "hetsearch/graph.hpp"
#include "hetsearch/index.hpp"

namespace hetsearch {

inline constexpr int kGraphFormatVersion = 1;

/// A graph together with its keyword index.
struct IntegratedGraph {
  Graph graph;
  InvertedIndex index;

  IntegratedGraph() = default;
  explicit IntegratedGraph(Tokenizer tokenizer) : index(std::move(tokenizer)) {}
};

/// One JSON record per line: meta, then nodes, then edges, all in id order.
void write_graph(const Graph& graph, std::ostream& out);

/// Throws ParseError (with line) on malformed records or a version mismatch
/// and GraphError on dangling references or non-dense ids.
Graph read_graph(std::istream& in);

/// One {"kw","ids"} record per keyword, sorted by keyword.
void write_index(const InvertedIndex& index, std::ostream& out);
InvertedIndex::Entries read_index(std::istream& in);

/// Writes `path` and `path.idx`.
void persist(const IntegratedGraph& g, const std::filesystem::path& path);

/// Reads `path`; the index comes from `path.idx` when present, otherwise it
/// is rebuilt with `tokenizer`.
IntegratedGraph load(const std::filesystem::path& path, Tokenizer tokenizer = {});

std::filesystem::path index_path(const std::filesystem::path& graph_path);

}  // namespace hetsearch
