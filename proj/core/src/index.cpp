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
#include "hetsearch/index.hpp"

#include <algorithm>
#include <fstream>

#include "hetsearch/error.hpp"
#include "hetsearch/text.hpp"

namespace hetsearch {

namespace {

constexpr std::string_view kDefaultStopwords[] = {
    // English
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
    "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "few", "for",
    "from", "further", "had", "has", "have", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
    "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once",
    "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own", "same", "she",
    "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "very", "was", "we", "were", "what", "when", "where", "which",
    "while", "who", "whom", "why", "will", "with", "would", "you", "your", "yours", "yourself",
    "yourselves", "also", "said", "says", "say", "got", "get", "gets", "make", "made", "went",
    "go", "goes",
    // French
    "au", "aux", "avec", "ce", "ces", "dans", "de", "des", "du", "elle", "elles", "en", "et",
    "eux", "il", "ils", "je", "la", "le", "les", "leur", "leurs", "lui", "ma", "mais", "me",
    "mes", "moi", "mon", "ne", "nos", "notre", "nous", "ou", "où", "par", "pas", "pour", "qu",
    "que", "qui", "sa", "se", "ses", "son", "sur", "ta", "te", "tes", "toi", "ton", "tu", "un",
    "une", "vos", "votre", "vous", "est", "sont", "été", "être", "avoir", "ont", "était", "entre",
    "cette", "cet", "plus", "sans", "sous", "chez", "comme", "aussi", "selon", "lors", "dont",
};

// Splits s into maximal runs of word characters.
std::vector<std::string> word_runs(std::string_view s) {
  std::vector<std::string> out;
  std::u32string current;
  for (char32_t c : text::to_u32(s)) {
    if (text::is_word_char(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      out.push_back(text::to_utf8(current));
      current.clear();
    }
  }
  if (!current.empty()) {
    out.push_back(text::to_utf8(current));
  }
  return out;
}

std::size_t code_points(std::string_view s) { return text::to_u32(s).size(); }

struct UriParts {
  std::vector<std::string> host_labels;
  std::string_view rest;
};

// scheme:[//authority]rest. Returns the host labels worth keeping (no "www",
// no top-level domain) and everything after the authority.
UriParts split_uri(std::string_view uri) {
  UriParts parts;
  std::size_t pos = 0;
  const std::size_t colon = uri.find(':');
  const bool has_scheme =
      colon != std::string_view::npos && colon > 0 &&
      std::all_of(uri.begin(), uri.begin() + static_cast<std::ptrdiff_t>(colon), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
      }) &&
      uri[0] >= 'a' && uri[0] <= 'z';
  if (!has_scheme) {
    parts.rest = uri;
    return parts;
  }
  pos = colon + 1;
  if (uri.substr(pos, 2) == "//") {
    pos += 2;
    std::size_t end = uri.find_first_of("/?#", pos);
    if (end == std::string_view::npos) end = uri.size();
    std::string_view authority = uri.substr(pos, end - pos);
    if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
      authority.remove_prefix(at + 1);
    }
    if (const auto port = authority.find(':'); port != std::string_view::npos) {
      authority = authority.substr(0, port);
    }
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= authority.size()) {
      const std::size_t dot = authority.find('.', start);
      const std::size_t stop = dot == std::string_view::npos ? authority.size() : dot;
      if (stop > start) labels.emplace_back(authority.substr(start, stop - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    if (labels.size() >= 2) labels.pop_back();  // top-level domain
    for (auto& label : labels) {
      if (label != "www") parts.host_labels.push_back(std::move(label));
    }
    pos = end;
  }
  parts.rest = uri.substr(pos);
  return parts;
}

}  // namespace

Tokenizer::Tokenizer() : Tokenizer(default_stopwords(), std::make_shared<PorterStemmer>()) {}

Tokenizer::Tokenizer(StopwordSet stopwords, std::shared_ptr<const Stemmer> stemmer)
    : stemmer_(std::move(stemmer)) {
  for (const auto& w : stopwords) {
    stopwords_.insert(text::normalize(w));
  }
  if (!stemmer_) {
    stemmer_ = std::make_shared<IdentityStemmer>();
  }
}

StopwordSet Tokenizer::default_stopwords() {
  StopwordSet out;
  for (std::string_view w : kDefaultStopwords) out.emplace(w);
  return out;
}

StopwordSet Tokenizer::load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open stopword file " + path.string());
  }
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string word = text::collapse_whitespace(line);
    if (!word.empty()) words.insert(text::normalize(word));
  }
  return words;
}

bool Tokenizer::is_stopword(std::string_view token) const {
  return stopwords_.contains(std::string(token));
}

bool Tokenizer::keep(std::string_view token) const {
  return code_points(token) >= 2 && !is_stopword(token);
}

std::string Tokenizer::stem(std::string_view token) const {
  std::string current(token);
  for (int i = 0; i < 16; ++i) {
    std::string next = stemmer_->stem(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

void Tokenizer::add_keyword(std::string_view raw, std::vector<std::string>& out) const {
  if (!keep(raw)) return;
  std::string stemmed = stem(raw);
  if (keep(stemmed)) out.push_back(std::move(stemmed));
}

std::vector<std::string> Tokenizer::tokenize(std::string_view label, NodeKind kind) const {
  const std::string normalized = text::normalize(label);
  std::vector<std::string> out;
  if (kind == NodeKind::Uri) {
    const UriParts parts = split_uri(normalized);
    for (const auto& host : parts.host_labels) {
      for (const auto& token : word_runs(host)) add_keyword(token, out);
    }
    for (const auto& token : word_runs(parts.rest)) add_keyword(token, out);
  } else {
    for (const auto& token : word_runs(normalized)) add_keyword(token, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t InvertedIndex::index_node(const Node& node) {
  if (node.label.empty()) return 0;
  const auto keywords = tokenizer_.tokenize(node.label, node.kind);
  for (const auto& kw : keywords) {
    add_posting(kw, node.id);
  }
  return keywords.size();
}

void InvertedIndex::rebuild(const Graph& graph) {
  entries_.clear();
  for (const Node& n : graph.nodes()) {
    index_node(n);
  }
}

void InvertedIndex::add_posting(const std::string& keyword, NodeId node) {
  auto& ids = entries_[keyword];
  if (ids.empty() || ids.back() < node) {
    ids.push_back(node);
    return;
  }
  const auto it = std::lower_bound(ids.begin(), ids.end(), node);
  if (it == ids.end() || *it != node) ids.insert(it, node);
}

std::span<const NodeId> InvertedIndex::postings(std::string_view keyword) const {
  const auto it = entries_.find(keyword);
  if (it == entries_.end()) return {};
  return it->second;
}

std::size_t InvertedIndex::posting_count() const {
  std::size_t n = 0;
  for (const auto& [kw, ids] : entries_) n += ids.size();
  return n;
}

std::vector<InvertedIndex::Match> InvertedIndex::lookup(const Graph& graph,
                                                        std::string_view keyword) const {
  const auto stems = tokenizer_.tokenize(keyword);
  if (stems.empty()) return {};

  std::vector<NodeId> candidates;
  bool first = true;
  for (const auto& stem : stems) {
    const auto ids = postings(stem);
    if (first) {
      candidates.assign(ids.begin(), ids.end());
      first = false;
    } else {
      std::vector<NodeId> narrowed;
      std::set_intersection(candidates.begin(), candidates.end(), ids.begin(), ids.end(),
                            std::back_inserter(narrowed));
      candidates = std::move(narrowed);
    }
    if (candidates.empty()) return {};
  }

  std::vector<Match> out;
  for (NodeId id : candidates) {
    if (!graph.contains(id)) continue;
    bool has_matching_entity_child = false;
    for (EdgeId eid : graph.out_edges(id)) {
      const Edge& e = graph.edge(eid);
      if (e.kind == EdgeKind::Data && e.label.starts_with(kExtractEdgePrefix) &&
          std::binary_search(candidates.begin(), candidates.end(), e.target)) {
        has_matching_entity_child = true;
        break;
      }
    }
    if (has_matching_entity_child) continue;
    out.push_back(Match{id, 1.0, graph.node(id).kind == NodeKind::DoNotLink});
  }
  return out;
}

}  // namespace hetsearch
