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
#include "hetsearch/extract.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "graph_access.hpp"
#include "hetsearch/error.hpp"
#include "hetsearch/text.hpp"

namespace hetsearch {

using detail::GraphAccess;

namespace {

struct Word {
  std::size_t start;  // code points
  std::size_t end;
  std::u32string text;
};

std::vector<Word> split_words(const std::u32string& s) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!text::is_word_char(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && text::is_word_char(s[j])) ++j;
    words.push_back({i, j, s.substr(i, j - i)});
    i = j;
  }
  return words;
}

std::string words_key(std::string_view s) {
  std::string key;
  for (const Word& w : split_words(text::to_u32(text::normalize(s)))) {
    if (!key.empty()) key += ' ';
    key += text::to_utf8(w.text);
  }
  return key;
}

bool is_upper_initial(const std::u32string& word) {
  if (word.empty() || word[0] >= 0x80 || !(word[0] >= U'A' && word[0] <= U'Z')) return false;
  return word.size() >= 2 && std::all_of(word.begin() + 1, word.end(), [](char32_t c) {
           return c >= 0x80 || (c >= U'a' && c <= U'z');
         });
}

}  // namespace

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::Person:
      return "person";
    case EntityType::Location:
      return "location";
    case EntityType::Organization:
      return "organization";
  }
  return "person";
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  const std::string n = text::normalize(name);
  if (n == "person" || n == "per") return EntityType::Person;
  if (n == "location" || n == "loc") return EntityType::Location;
  if (n == "organization" || n == "organisation" || n == "org") return EntityType::Organization;
  return std::nullopt;
}

NodeKind node_kind(EntityType type) {
  switch (type) {
    case EntityType::Person:
      return NodeKind::EntityPerson;
    case EntityType::Location:
      return NodeKind::EntityLocation;
    case EntityType::Organization:
      return NodeKind::EntityOrganization;
  }
  return NodeKind::EntityPerson;
}

std::string extract_edge_label(EntityType type) {
  return std::string(kExtractEdgePrefix) + std::string(to_string(type));
}

void Gazetteer::add(std::string_view surface, EntityType type, double confidence) {
  const std::string key = words_key(surface);
  if (key.empty()) throw std::invalid_argument("empty gazetteer surface");
  if (!(confidence > 0.0 && confidence <= 1.0)) {
    throw std::invalid_argument("gazetteer confidence out of (0,1]");
  }
  entries_.insert_or_assign(key, Entry{text::collapse_whitespace(surface), type, confidence});
  max_words_ = std::max<std::size_t>(max_words_, std::count(key.begin(), key.end(), ' ') + 1);
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gazetteer " + path.string());
  Gazetteer g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (text::collapse_whitespace(line).empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() < 2 || cols.size() > 3) {
      throw ParseError(path.string() + ": expected surface<TAB>kind[<TAB>confidence]", line_no);
    }
    const auto type = parse_entity_type(text::collapse_whitespace(cols[1]));
    if (!type) throw ParseError(path.string() + ": unknown entity kind '" + cols[1] + "'", line_no);
    double confidence = 1.0;
    if (cols.size() == 3 && !text::collapse_whitespace(cols[2]).empty()) {
      try {
        confidence = std::stod(cols[2]);
      } catch (const std::exception&) {
        throw ParseError(path.string() + ": bad confidence '" + cols[2] + "'", line_no);
      }
    }
    try {
      g.add(cols[0], *type, confidence);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path.string() + ": " + e.what(), line_no);
    }
  }
  return g;
}

const Gazetteer::Entry* Gazetteer::find(const std::string& words) const {
  const auto it = entries_.find(words);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<EntityMention> extract_entities(std::string_view label, const Gazetteer& gazetteer,
                                            const DoNotLinkSet& do_not_link,
                                            const ExtractorOptions& options) {
  const std::u32string original = text::to_u32(text::nfc(label));
  const std::u32string lowered = text::to_u32(text::normalize(label));
  // Lowercasing can change lengths (rare); fall back to per-word lowering then.
  const bool aligned = original.size() == lowered.size();
  const std::vector<Word> words = split_words(original);

  auto normalized_word = [&](const Word& w) {
    return aligned ? text::to_utf8(lowered.substr(w.start, w.end - w.start))
                   : text::normalize(text::to_utf8(w.text));
  };
  auto blocked = [&](const std::string& s) {
    return do_not_link.contains(text::normalize(s));
  };

  std::vector<EntityMention> out;
  std::vector<bool> covered(words.size(), false);
  const std::size_t longest = std::min(options.max_ngram, gazetteer.max_words());
  std::size_t i = 0;
  while (i < words.size()) {
    bool matched = false;
    for (std::size_t n = std::min(longest, words.size() - i); n >= 1; --n) {
      std::string key;
      for (std::size_t j = i; j < i + n; ++j) {
        if (j > i) key += ' ';
        key += normalized_word(words[j]);
      }
      const Gazetteer::Entry* entry = gazetteer.find(key);
      if (entry == nullptr) continue;
      EntityMention m;
      m.start = words[i].start;
      m.end = words[i + n - 1].end;
      m.type = entry->type;
      m.surface = text::to_utf8(original.substr(m.start, m.end - m.start));
      m.canonical = entry->surface;
      m.confidence = entry->confidence;
      if (!blocked(m.surface) && !blocked(m.canonical)) out.push_back(std::move(m));
      std::fill(covered.begin() + static_cast<std::ptrdiff_t>(i),
                covered.begin() + static_cast<std::ptrdiff_t>(i + n), true);
      i += n;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }

  if (options.person_heuristic) {
    std::size_t k = 0;
    while (k < words.size()) {
      std::size_t j = k;
      while (j < words.size() && !covered[j] && is_upper_initial(words[j].text)) {
        // Words must be separated by plain whitespace.
        if (j > k) {
          const auto gap = original.substr(words[j - 1].end, words[j].start - words[j - 1].end);
          if (gap != U" ") break;
        }
        ++j;
      }
      if (j - k >= 2) {
        EntityMention m;
        m.start = words[k].start;
        m.end = words[j - 1].end;
        m.type = EntityType::Person;
        m.surface = text::to_utf8(original.substr(m.start, m.end - m.start));
        m.canonical = m.surface;
        m.confidence = options.heuristic_confidence;
        if (!blocked(m.surface)) out.push_back(std::move(m));
        k = j;
      } else {
        k = std::max(j, k + 1);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const EntityMention& a, const EntityMention& b) { return a.start < b.start; });
  }
  return out;
}

std::vector<std::pair<NodeId, EdgeId>> attach_entities(Graph& graph, NodeId id,
                                                       const std::vector<EntityMention>& mentions,
                                                       InvertedIndex* index) {
  const Node& node = graph.node(id);
  const DatasetId dataset = node.dataset;
  std::vector<std::pair<NodeId, EdgeId>> out;
  for (const EntityMention& m : mentions) {
    const NodeKind kind = node_kind(m.type);
    const std::string& label = m.canonical.empty() ? m.surface : m.canonical;
    auto& lookup = GraphAccess::entity_nodes(graph);
    const std::string key = GraphAccess::entity_key(dataset, kind, label);
    NodeId entity;
    if (const auto it = lookup.find(key); it != lookup.end()) {
      entity = it->second;
    } else {
      entity = graph.add_node(kind, label, dataset);
      lookup.emplace(key, entity);
      if (index != nullptr) index->index_node(graph.node(entity));
    }
    const std::string edge_label = extract_edge_label(m.type);
    bool exists = false;
    for (EdgeId eid : graph.out_edges(id)) {
      const Edge& e = graph.edge(eid);
      if (e.target == entity && e.label == edge_label) {
        exists = true;
        break;
      }
    }
    if (exists) continue;
    out.emplace_back(entity, graph.add_edge(id, entity, edge_label, m.confidence));
  }
  return out;
}

}  // namespace hetsearch
