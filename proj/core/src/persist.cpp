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
#include "hetsearch/store.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "graph_access.hpp"
#include "hetsearch/error.hpp"

namespace hetsearch {

using detail::GraphAccess;
using Json = nlohmann::ordered_json;

namespace {

template <class T>
T field(const Json& record, const char* name, std::size_t line) {
  const auto it = record.find(name);
  if (it == record.end()) throw ParseError(std::string("missing field '") + name + "'", line);
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("bad value for field '") + name + "'", line);
  }
}

std::uint64_t id_field(const Json& record, const char* name, std::size_t line) {
  const auto it = record.find(name);
  if (it == record.end() || !it->is_number_unsigned()) {
    if (it != record.end() && it->is_number_integer() && it->get<std::int64_t>() >= 0) {
      return it->get<std::uint64_t>();
    }
    throw ParseError(std::string("field '") + name + "' must be an unsigned integer", line);
  }
  return it->get<std::uint64_t>();
}

double number_field(const Json& record, const char* name, std::size_t line) {
  const auto it = record.find(name);
  if (it == record.end() || !it->is_number()) {
    throw ParseError(std::string("field '") + name + "' must be a number", line);
  }
  return it->get<double>();
}

Json parse_line(const std::string& line, std::size_t line_no) {
  try {
    Json record = Json::parse(line);
    if (!record.is_object()) throw ParseError("record is not an object", line_no);
    return record;
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON record: ") + e.what(), line_no);
  }
}

}  // namespace

std::filesystem::path index_path(const std::filesystem::path& graph_path) {
  std::filesystem::path p = graph_path;
  p += ".idx";
  return p;
}

void write_graph(const Graph& graph, std::ostream& out) {
  Json meta;
  meta["kind"] = "meta";
  meta["version"] = kGraphFormatVersion;
  meta["next_node_id"] = static_cast<std::uint64_t>(graph.node_count());
  meta["next_edge_id"] = static_cast<std::uint64_t>(graph.edge_count());
  out << meta.dump() << '\n';
  for (const Node& n : graph.nodes()) {
    Json r;
    r["kind"] = "node";
    r["id"] = n.id.value;
    r["type"] = to_string(n.kind);
    r["label"] = n.label;
    r["dataset"] = n.dataset.value;
    r["rep"] = n.rep.value;
    r["path"] = n.path ? Json(*n.path) : Json(nullptr);
    out << r.dump() << '\n';
  }
  for (const Edge& e : graph.edges()) {
    Json r;
    r["kind"] = "edge";
    r["id"] = e.id.value;
    r["src"] = e.source.value;
    r["tgt"] = e.target.value;
    r["label"] = e.label;
    r["conf"] = e.confidence;
    r["ekind"] = to_string(e.kind);
    r["n_in"] = e.n_in;
    r["n_out"] = e.n_out;
    r["spec"] = e.specificity;
    out << r.dump() << '\n';
  }
}

Graph read_graph(std::istream& in) {
  Graph graph;
  std::string line;
  std::size_t line_no = 0;
  bool have_meta = false;
  std::uint64_t expected_nodes = 0;
  std::uint64_t expected_edges = 0;
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json r = parse_line(line, line_no);
    const auto kind = field<std::string>(r, "kind", line_no);
    if (kind == "meta") {
      if (have_meta) throw ParseError("duplicate meta record", line_no);
      const auto version = field<int>(r, "version", line_no);
      if (version != kGraphFormatVersion) {
        throw ParseError("unsupported graph format version " + std::to_string(version), line_no);
      }
      expected_nodes = id_field(r, "next_node_id", line_no);
      expected_edges = id_field(r, "next_edge_id", line_no);
      have_meta = true;
      continue;
    }
    if (!have_meta) throw ParseError("meta record must come first", line_no);
    if (kind == "node") {
      Node n;
      n.id = NodeId{id_field(r, "id", line_no)};
      const auto type = field<std::string>(r, "type", line_no);
      const auto parsed = parse_node_kind(type);
      if (!parsed) throw ParseError("unknown node type '" + type + "'", line_no);
      n.kind = *parsed;
      n.label = field<std::string>(r, "label", line_no);
      n.dataset = DatasetId{id_field(r, "dataset", line_no)};
      n.rep = NodeId{id_field(r, "rep", line_no)};
      const auto path = r.find("path");
      if (path != r.end() && !path->is_null()) {
        if (!path->is_string()) throw ParseError("field 'path' must be a string or null", line_no);
        n.path = path->get<std::string>();
      }
      nodes.push_back(std::move(n));
    } else if (kind == "edge") {
      Edge e;
      e.id = EdgeId{id_field(r, "id", line_no)};
      e.source = NodeId{id_field(r, "src", line_no)};
      e.target = NodeId{id_field(r, "tgt", line_no)};
      e.label = field<std::string>(r, "label", line_no);
      e.confidence = number_field(r, "conf", line_no);
      const auto ekind = field<std::string>(r, "ekind", line_no);
      const auto parsed = parse_edge_kind(ekind);
      if (!parsed || *parsed == EdgeKind::SameAs) {
        throw ParseError("unknown edge kind '" + ekind + "'", line_no);
      }
      e.kind = *parsed;
      e.n_in = id_field(r, "n_in", line_no);
      e.n_out = id_field(r, "n_out", line_no);
      e.specificity = number_field(r, "spec", line_no);
      edges.push_back(std::move(e));
    } else {
      throw ParseError("unknown record kind '" + kind + "'", line_no);
    }
  }
  if (!have_meta) throw ParseError("missing meta record", 0);
  if (nodes.size() != expected_nodes || edges.size() != expected_edges) {
    throw GraphError("record counts do not match the meta record");
  }
  for (Node& n : nodes) {
    if (n.dataset.value + 1 > graph.dataset_count()) {
      GraphAccess::set_dataset_count(graph, n.dataset.value + 1);
    }
    GraphAccess::push_node(graph, std::move(n));
  }
  for (Edge& e : edges) GraphAccess::push_edge(graph, std::move(e));
  GraphAccess::rebuild_derived(graph);
  return graph;
}

void write_index(const InvertedIndex& index, std::ostream& out) {
  for (const auto& [kw, ids] : index.entries()) {
    Json r;
    r["kw"] = kw;
    Json list = Json::array();
    for (NodeId id : ids) list.push_back(id.value);
    r["ids"] = std::move(list);
    out << r.dump() << '\n';
  }
}

InvertedIndex::Entries read_index(std::istream& in) {
  InvertedIndex::Entries entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json r = parse_line(line, line_no);
    const auto kw = field<std::string>(r, "kw", line_no);
    const auto ids = r.find("ids");
    if (ids == r.end() || !ids->is_array()) throw ParseError("field 'ids' must be an array", line_no);
    auto& posting = entries[kw];
    for (const auto& id : *ids) {
      if (!id.is_number_unsigned()) throw ParseError("posting ids must be unsigned", line_no);
      posting.push_back(NodeId{id.get<std::uint64_t>()});
    }
  }
  return entries;
}

void persist(const IntegratedGraph& g, const std::filesystem::path& path) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    write_graph(g.graph, out);
    if (!out) throw IoError("write failed for " + path.string());
  }
  const auto idx = index_path(path);
  std::ofstream out(idx, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + idx.string());
  write_index(g.index, out);
  if (!out) throw IoError("write failed for " + idx.string());
}

IntegratedGraph load(const std::filesystem::path& path, Tokenizer tokenizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  IntegratedGraph g(std::move(tokenizer));
  g.graph = read_graph(in);
  const auto idx = index_path(path);
  if (std::filesystem::exists(idx)) {
    std::ifstream idx_in(idx, std::ios::binary);
    if (!idx_in) throw IoError("cannot open " + idx.string());
    auto entries = read_index(idx_in);
    for (const auto& [kw, ids] : entries) {
      for (NodeId id : ids) {
        if (!g.graph.contains(id)) {
          throw GraphError("index posting for '" + kw + "' names unknown node " +
                           std::to_string(id.value));
        }
      }
    }
    g.index.assign(std::move(entries));
  } else {
    g.index.rebuild(g.graph);
  }
  return g;
}

}  // namespace hetsearch
