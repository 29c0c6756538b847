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
#include <vector>

#include "hetsearch/extract.hpp"
#include "hetsearch/graph.hpp"
#include "hetsearch/link.hpp"
#include "hetsearch/store.hpp"

namespace hetsearch {

enum class SourceFormat : std::uint8_t { Json, Csv, NTriples, Text, Html };

std::string_view to_string(SourceFormat format);
/// "json", "csv", "ntriples" (or "nt"), "text" (or "txt"), "html" (or "xml").
std::optional<SourceFormat> parse_source_format(std::string_view name);
std::optional<SourceFormat> format_from_extension(const std::filesystem::path& path);

enum class LoadMode : std::uint8_t { PerInstance, PerType, PerValue };

std::string_view to_string(LoadMode mode);
/// "per-instance", "per-type", "per-value" (underscores accepted).
std::optional<LoadMode> parse_load_mode(std::string_view name);

/// A node occurrence in a source document.
struct NodeSpec {
  NodeKind kind = NodeKind::Value;
  std::string label;
  std::string path;  // root-to-node label path; empty for flat sources
};

/// Parent-to-child edge between two occurrences (indices into
/// Traversal::nodes). Occurrence 0 is the dataset root.
struct TraversedEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

struct Traversal {
  std::vector<NodeSpec> nodes;
  std::vector<TraversedEdge> edges;
  bool hierarchical = true;  // false for N-Triples
};

/// Parses a document into node occurrences and edges in document order.
/// Throws ParseError carrying the 1-based line of the problem.
Traversal traverse(std::string_view input, SourceFormat format);

/// Unification keys of one dataset. Occurrences with equal keys become one
/// node. Internal and dataset nodes always get a fresh key.
class NodeKeyFactory {
 public:
  NodeKeyFactory(LoadMode mode, DatasetId dataset) : mode_(mode), dataset_(dataset) {}

  std::string key(const NodeSpec& spec);

 private:
  LoadMode mode_;
  DatasetId dataset_;
  std::uint64_t fresh_ = 0;
};

struct RegistrationConfig {
  LoadMode mode = LoadMode::PerInstance;
  /// Labels turned into do-not-link nodes (compared after normalization).
  DoNotLinkSet do_not_link;
  double tau = kDefaultSimilarityThreshold;
  Gazetteer gazetteer;
  ExtractorOptions extractor;
};

struct RegistrationReport {
  DatasetId dataset;
  std::size_t nodes_added = 0;
  std::size_t edges_added = 0;
  std::size_t entities_added = 0;
  std::size_t similar_edges = 0;
  std::size_t joins = 0;  // nodes that joined an equivalence set
  LoadMode mode_used = LoadMode::PerInstance;
  std::vector<std::string> warnings;
};

/// Adds one dataset: traversal, unification, extraction, indexing, then
/// representative assignment and similar edges for every new node. The
/// graph is untouched when parsing fails. `name` labels the dataset root.
RegistrationReport register_dataset(IntegratedGraph& g, std::string_view input,
                                    SourceFormat format, const RegistrationConfig& config,
                                    std::string_view name);

/// Reads the file (format from the extension when not given) and registers
/// it under its file name. Throws IoError; ParseError messages are prefixed
/// with the path.
RegistrationReport register_file(IntegratedGraph& g, const std::filesystem::path& path,
                                 std::optional<SourceFormat> format,
                                 const RegistrationConfig& config);

}  // namespace hetsearch
