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
#include "hetsearch/answer_io.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hetsearch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string edge_label(const Graph& graph, const EdgeRef& e) {
  if (e.kind == EdgeKind::SameAs) return std::string(kSameAsLabel);
  return graph.edge(e.id).label;
}

double edge_confidence(const Graph& graph, const EdgeRef& e) {
  return e.kind == EdgeKind::SameAs ? 1.0 : graph.edge(e.id).confidence;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                 "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

}  // namespace

std::string answer_to_json(const Graph& graph, const Answer& answer,
                           const std::vector<std::string>& keywords) {
  ordered_json j;
  j["score"] = answer.score.total;
  j["ms"] = answer.score.ms;
  j["conf"] = answer.score.conf_prod;
  j["spec"] = answer.score.spec_prod;
  j["edges"] = ordered_json::array();
  for (const EdgeRef& e : answer.edges) {
    ordered_json je;
    je["src"] = e.source.value;
    je["tgt"] = e.target.value;
    je["label"] = edge_label(graph, e);
    je["kind"] = std::string(to_string(e.kind));
    je["conf"] = edge_confidence(graph, e);
    j["edges"].push_back(std::move(je));
  }
  j["matches"] = ordered_json::object();
  for (std::size_t i = 0; i < keywords.size() && i < answer.matches.size(); ++i) {
    j["matches"][keywords[i]] = answer.primary_match(graph, keywords, i).value;
  }
  return j.dump();
}

std::string answers_to_json_lines(const Graph& graph, std::span<const Answer> answers,
                                  const std::vector<std::string>& keywords) {
  std::string out;
  for (const auto& a : answers) {
    out += answer_to_json(graph, a, keywords);
    out += '\n';
  }
  return out;
}

std::string answers_to_dot(const Graph& graph, std::span<const Answer> answers) {
  std::ostringstream os;
  os << "digraph answers {\n  node [style=filled];\n";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const Answer& a = answers[i];
    os << "  subgraph cluster_" << i << " {\n";
    os << "    label=\"#" << (i + 1) << " score=" << std::setprecision(4) << a.score.total
       << "\";\n";
    for (NodeId n : a.nodes) {
      const Node& node = graph.node(n);
      os << "    a" << i << "_" << n.value << " [label=\"" << dot_escape(node.label)
         << "\", fillcolor=\"" << kPalette[node.dataset.value % kPalette.size()] << "\"];\n";
    }
    for (const EdgeRef& e : a.edges) {
      os << "    a" << i << "_" << e.source.value << " -> a" << i << "_" << e.target.value
         << " [label=\"" << dot_escape(edge_label(graph, e)) << "\"";
      if (e.kind == EdgeKind::SameAs) os << ", style=dashed, dir=none";
      if (e.kind == EdgeKind::Similar) os << ", style=dotted";
      os << "];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string answers_to_text(const Graph& graph, std::span<const Answer> answers,
                            const std::vector<std::string>& keywords) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const Answer& a = answers[i];
    os << "#" << (i + 1) << " score=" << a.score.total << " ms=" << a.score.ms
       << " conf=" << a.score.conf_prod << " spec=" << a.score.spec_prod << "\n";
    if (a.edges.empty()) {
      const Node& n = graph.node(a.nodes.front());
      os << "  [" << n.id << "] " << n.label << "\n";
    }
    for (const EdgeRef& e : a.edges) {
      os << "  [" << e.source << "] " << graph.node(e.source).label << " --"
         << edge_label(graph, e);
      if (e.kind != EdgeKind::Data) os << " (" << to_string(e.kind) << " " << edge_confidence(graph, e) << ")";
      os << "--> [" << e.target << "] " << graph.node(e.target).label << "\n";
    }
    for (std::size_t k = 0; k < keywords.size() && k < a.matches.size(); ++k) {
      os << "  " << keywords[k] << " -> " << a.primary_match(graph, keywords, k) << "\n";
    }
  }
  return os.str();
}

}  // namespace hetsearch
