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
#include "hetsearch/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "hetsearch/error.hpp"
#include "hetsearch/text.hpp"
#include "parsers.hpp"

namespace hetsearch {

std::string_view to_string(SourceFormat format) {
  switch (format) {
    case SourceFormat::Json:
      return "json";
    case SourceFormat::Csv:
      return "csv";
    case SourceFormat::NTriples:
      return "ntriples";
    case SourceFormat::Text:
      return "text";
    case SourceFormat::Html:
      return "html";
  }
  return "json";
}

std::optional<SourceFormat> parse_source_format(std::string_view name) {
  const std::string n = text::normalize(name);
  if (n == "json") return SourceFormat::Json;
  if (n == "csv") return SourceFormat::Csv;
  if (n == "ntriples" || n == "nt" || n == "n-triples") return SourceFormat::NTriples;
  if (n == "text" || n == "txt") return SourceFormat::Text;
  if (n == "html" || n == "htm" || n == "xml") return SourceFormat::Html;
  return std::nullopt;
}

std::optional<SourceFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (!ext.empty()) ext.erase(0, 1);
  return parse_source_format(ext);
}

std::string_view to_string(LoadMode mode) {
  switch (mode) {
    case LoadMode::PerInstance:
      return "per-instance";
    case LoadMode::PerType:
      return "per-type";
    case LoadMode::PerValue:
      return "per-value";
  }
  return "per-instance";
}

std::optional<LoadMode> parse_load_mode(std::string_view name) {
  std::string n = text::normalize(name);
  std::replace(n.begin(), n.end(), '_', '-');
  if (n == "per-instance") return LoadMode::PerInstance;
  if (n == "per-type") return LoadMode::PerType;
  if (n == "per-value") return LoadMode::PerValue;
  return std::nullopt;
}

Traversal traverse(std::string_view input, SourceFormat format) {
  if (const auto bad = text::find_invalid_utf8(input)) {
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(input.begin(), input.begin() + *bad, '\n'));
    throw ParseError("invalid UTF-8", line);
  }
  switch (format) {
    case SourceFormat::Json:
      return detail::traverse_json(input);
    case SourceFormat::Csv:
      return detail::traverse_csv(input);
    case SourceFormat::NTriples:
      return detail::traverse_ntriples(input);
    case SourceFormat::Text:
      return detail::traverse_text(input);
    case SourceFormat::Html:
      return detail::traverse_html(input);
  }
  return {};
}

std::string NodeKeyFactory::key(const NodeSpec& spec) {
  const bool never_fused = spec.kind == NodeKind::Internal || spec.kind == NodeKind::DatasetRoot;
  if (never_fused || mode_ == LoadMode::PerInstance) {
    return "#" + std::to_string(fresh_++);
  }
  std::string k = std::to_string(dataset_.value);
  k += '\x1f';
  k += to_string(spec.kind);
  k += '\x1f';
  k += spec.label;
  if (mode_ == LoadMode::PerType) {
    k += '\x1f';
    k += spec.path;
  }
  return k;
}

RegistrationReport register_dataset(IntegratedGraph& g, std::string_view input,
                                    SourceFormat format, const RegistrationConfig& config,
                                    std::string_view name) {
  if (!(config.tau > 0.0 && config.tau <= 1.0)) {
    throw std::invalid_argument("similarity threshold must lie in (0,1]");
  }
  Traversal traversal = traverse(input, format);

  RegistrationReport report;
  report.mode_used = config.mode;
  if (format == SourceFormat::NTriples && config.mode != LoadMode::PerValue) {
    report.warnings.push_back("mode " + std::string(to_string(config.mode)) +
                              " does not apply to RDF; loading per-value");
    report.mode_used = LoadMode::PerValue;
  }

  Graph& graph = g.graph;
  const std::size_t first_new = graph.node_count();
  const DatasetId dataset = graph.add_dataset();
  report.dataset = dataset;

  DoNotLinkSet do_not_link;
  for (const auto& label : config.do_not_link) do_not_link.insert(text::normalize(label));

  NodeKeyFactory keys(report.mode_used, dataset);
  std::unordered_map<std::string, NodeId> by_key;
  std::vector<NodeId> occurrence_ids(traversal.nodes.size());
  for (std::size_t i = 0; i < traversal.nodes.size(); ++i) {
    NodeSpec& spec = traversal.nodes[i];
    if (i == 0) {
      spec.kind = NodeKind::DatasetRoot;
      spec.label = std::string(name);
    }
    const bool scalar = spec.kind == NodeKind::Value || spec.kind == NodeKind::Number ||
                        spec.kind == NodeKind::Uri;
    if (scalar && do_not_link.contains(text::normalize(spec.label))) {
      spec.kind = NodeKind::DoNotLink;
    }
    const std::string key = keys.key(spec);
    const auto it = by_key.find(key);
    if (it != by_key.end()) {
      occurrence_ids[i] = it->second;
      continue;
    }
    std::optional<std::string> path;
    if (traversal.hierarchical && spec.kind != NodeKind::DatasetRoot) path = spec.path;
    const NodeId id = graph.add_node(spec.kind, spec.label, dataset, std::move(path));
    by_key.emplace(key, id);
    occurrence_ids[i] = id;
  }

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::string>> seen;
  for (const TraversedEdge& te : traversal.edges) {
    const NodeId src = occurrence_ids[te.source];
    const NodeId tgt = occurrence_ids[te.target];
    if (src == tgt) {
      report.warnings.push_back("skipped self-loop on '" + graph.node(src).label + "' (" +
                                te.label + ")");
      continue;
    }
    if (!seen.emplace(src.value, tgt.value, te.label).second) continue;
    graph.add_edge(src, tgt, te.label, 1.0);
    ++report.edges_added;
  }

  const std::size_t last_source_node = graph.node_count();
  for (std::size_t i = first_new; i < last_source_node; ++i) {
    const Node& node = graph.node(NodeId{i});
    if (node.kind != NodeKind::Value || node.label.empty()) continue;
    const auto mentions = extract_entities(node.label, config.gazetteer, do_not_link,
                                           config.extractor);
    if (mentions.empty()) continue;
    const std::size_t before = graph.node_count();
    report.edges_added += attach_entities(graph, NodeId{i}, mentions).size();
    report.entities_added += graph.node_count() - before;
  }

  const std::size_t last_new = graph.node_count();
  report.nodes_added = last_new - first_new;
  for (std::size_t i = first_new; i < last_new; ++i) {
    g.index.index_node(graph.node(NodeId{i}));
  }
  for (std::size_t i = first_new; i < last_new; ++i) {
    const NodeId id{i};
    const LinkOutcome outcome = link_node(graph, g.index, id, config.tau);
    if (outcome.rep != id) ++report.joins;
    report.similar_edges += outcome.similar_edges.size();
  }
  return report;
}

RegistrationReport register_file(IntegratedGraph& g, const std::filesystem::path& path,
                                 std::optional<SourceFormat> format,
                                 const RegistrationConfig& config) {
  if (!format) format = format_from_extension(path);
  if (!format) throw std::invalid_argument("cannot infer the format of " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path.string());
  const std::string content = buffer.str();
  try {
    return register_dataset(g, content, *format, config, path.filename().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.detail(), e.line());
  }
}

}  // namespace hetsearch
