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
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/stemmer.hpp"

namespace hetsearch {

using StopwordSet = std::unordered_set<std::string>;

/// Turns labels into keywords: normalized, split, stopword-filtered, stemmed.
/// Stemming is iterated to a fixed point so tokenize() is idempotent.
class Tokenizer {
 public:
  Tokenizer();
  Tokenizer(StopwordSet stopwords, std::shared_ptr<const Stemmer> stemmer);

  /// English and French function words, pronouns and auxiliaries.
  static StopwordSet default_stopwords();

  /// One token per line, '#' starts a comment. Throws IoError.
  static StopwordSet load_stopwords(const std::filesystem::path& path);

  /// Sorted, deduplicated keywords of a label. Uri labels are decomposed on
  /// URI separators; the scheme, "www" and the top-level domain are dropped.
  std::vector<std::string> tokenize(std::string_view label, NodeKind kind = NodeKind::Value) const;

  std::string stem(std::string_view token) const;

  bool is_stopword(std::string_view token) const;
  const Stemmer& stemmer() const { return *stemmer_; }

 private:
  bool keep(std::string_view token) const;
  void add_keyword(std::string_view raw, std::vector<std::string>& out) const;

  StopwordSet stopwords_;
  std::shared_ptr<const Stemmer> stemmer_;
};

/// Keyword -> node postings. Derived state: rebuild(graph) reproduces it.
class InvertedIndex {
 public:
  using Entries = std::map<std::string, std::vector<NodeId>, std::less<>>;

  struct Match {
    NodeId node;
    double similarity = 1.0;
    bool do_not_link = false;
  };

  InvertedIndex() = default;
  explicit InvertedIndex(Tokenizer tokenizer) : tokenizer_(std::move(tokenizer)) {}

  const Tokenizer& tokenizer() const { return tokenizer_; }

  /// Posts every keyword of the node label. Returns the number of postings.
  std::size_t index_node(const Node& node);

  void rebuild(const Graph& graph);

  /// Inserts one posting, keeping the id list sorted and unique.
  void add_posting(const std::string& keyword, NodeId node);

  std::span<const NodeId> postings(std::string_view keyword) const;

  /// Nodes whose keywords contain every stem of `keyword`. A node is dropped
  /// when one of its extracted entity children matches too.
  std::vector<Match> lookup(const Graph& graph, std::string_view keyword) const;

  const Entries& entries() const { return entries_; }
  void assign(Entries entries) { entries_ = std::move(entries); }
  std::size_t posting_count() const;

  bool operator==(const InvertedIndex& other) const { return entries_ == other.entries_; }

 private:
  Tokenizer tokenizer_;
  Entries entries_;
};

/// Prefix of the labels given to extraction edges ("extract:person", ...).
inline constexpr std::string_view kExtractEdgePrefix = "extract:";

}  // namespace hetsearch
