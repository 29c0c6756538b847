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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hetsearch/graph.hpp"
#include "hetsearch/index.hpp"

namespace hetsearch {

enum class EntityType : std::uint8_t { Person, Location, Organization };

std::string_view to_string(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view name);
NodeKind node_kind(EntityType type);

struct EntityMention {
  std::size_t start = 0;  // code point offsets into the label, end exclusive
  std::size_t end = 0;
  EntityType type = EntityType::Person;
  std::string surface;    // text as it appears in the label
  std::string canonical;  // gazetteer form, used as the entity node label
  double confidence = 1.0;
};

/// Surface forms matched on whole words, case-insensitively.
class Gazetteer {
 public:
  struct Entry {
    std::string surface;
    EntityType type;
    double confidence;
  };

  /// Throws std::invalid_argument on an empty surface or a confidence
  /// outside (0,1].
  void add(std::string_view surface, EntityType type, double confidence = 1.0);

  /// TSV: surface, kind, optional confidence. '#' starts a comment.
  /// Throws IoError or ParseError.
  static Gazetteer load(const std::filesystem::path& path);

  /// `words` are normalized word tokens joined by single spaces.
  const Entry* find(const std::string& words) const;

  std::size_t max_words() const { return max_words_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_map<std::string, Entry> entries_;
  std::size_t max_words_ = 0;
};

struct ExtractorOptions {
  /// Capitalized word sequences (two or more words) become Person mentions.
  bool person_heuristic = false;
  double heuristic_confidence = 0.5;
  std::size_t max_ngram = 4;
};

/// Normalized do-not-link labels.
using DoNotLinkSet = std::unordered_set<std::string>;

/// Gazetteer n-grams, longest match first, left to right; then the optional
/// person heuristic on the words not yet covered. Mentions whose surface or
/// canonical form is in `do_not_link` are dropped. Sorted by start.
std::vector<EntityMention> extract_entities(std::string_view label, const Gazetteer& gazetteer,
                                            const DoNotLinkSet& do_not_link,
                                            const ExtractorOptions& options = {});

/// Adds, per mention, the entity node (one per dataset, kind and normalized
/// label) and an extraction edge from `node`. Existing edges are reused, so
/// repeated calls create nothing. When `index` is given, new entity nodes are
/// indexed. Returns the (entity, edge) pairs of this call.
std::vector<std::pair<NodeId, EdgeId>> attach_entities(Graph& graph, NodeId node,
                                                       const std::vector<EntityMention>& mentions,
                                                       InvertedIndex* index = nullptr);

std::string extract_edge_label(EntityType type);

}  // namespace hetsearch
