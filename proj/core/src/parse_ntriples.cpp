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
#include <array>

#include "hetsearch/error.hpp"
#include "hetsearch/text.hpp"
#include "parsers.hpp"

namespace hetsearch::detail {

namespace {

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
constexpr std::array<std::string_view, 16> kNumericTypes = {
    "integer",         "decimal",          "double",          "float",
    "int",             "long",             "short",           "byte",
    "nonNegativeInteger", "positiveInteger", "negativeInteger", "nonPositiveInteger",
    "unsignedInt",     "unsignedLong",     "unsignedShort",   "unsignedByte",
};

struct Term {
  NodeKind kind;
  std::string label;
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }

  Term subject() {
    skip_ws();
    if (peek() == '<') return {NodeKind::Uri, iri()};
    if (peek() == '_') return {NodeKind::Uri, blank()};
    fail("expected IRI or blank node as subject");
  }

  std::string predicate() {
    skip_ws();
    if (peek() != '<') fail("expected IRI as predicate");
    return iri();
  }

  Term object() {
    skip_ws();
    if (peek() == '<') return {NodeKind::Uri, iri()};
    if (peek() == '_') return {NodeKind::Uri, blank()};
    if (peek() == '"') return literal();
    fail("expected IRI, blank node or literal as object");
  }

  void finish() {
    skip_ws();
    if (peek() != '.') fail("expected '.' at end of triple");
    ++pos_;
    if (!at_end()) fail("unexpected content after '.'");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  std::string iri() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '>') {
      if (s_[pos_] == '\\') {
        out += escape();
      } else {
        out += s_[pos_++];
      }
    }
    if (pos_ >= s_.size()) fail("unterminated IRI");
    ++pos_;
    if (out.empty()) fail("empty IRI");
    return out;
  }

  std::string blank() {
    if (s_.substr(pos_, 2) != "_:") fail("malformed blank node");
    const std::size_t start = pos_;
    pos_ += 2;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '.') ++pos_;
    // A trailing '.' directly after the label ends the triple.
    if (pos_ - start == 2) fail("empty blank node label");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string escape() {
    ++pos_;
    if (pos_ >= s_.size()) fail("dangling escape");
    const char c = s_[pos_++];
    switch (c) {
      case 't':
        return "\t";
      case 'b':
        return "\b";
      case 'n':
        return "\n";
      case 'r':
        return "\r";
      case 'f':
        return "\f";
      case '"':
        return "\"";
      case '\'':
        return "'";
      case '\\':
        return "\\";
      case 'u':
        return hex(4);
      case 'U':
        return hex(8);
      default:
        fail(std::string("unknown escape \\") + c);
    }
  }

  std::string hex(std::size_t digits) {
    if (pos_ + digits > s_.size()) fail("truncated \\u escape");
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char h = s_[pos_++];
      cp <<= 4;
      if (h >= '0' && h <= '9') {
        cp |= static_cast<char32_t>(h - '0');
      } else if (h >= 'a' && h <= 'f') {
        cp |= static_cast<char32_t>(h - 'a' + 10);
      } else if (h >= 'A' && h <= 'F') {
        cp |= static_cast<char32_t>(h - 'A' + 10);
      } else {
        fail("bad hex digit in escape");
      }
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape is not a scalar value");
    return text::to_utf8(std::u32string(1, cp));
  }

  Term literal() {
    ++pos_;
    std::string value;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        value += escape();
      } else {
        value += s_[pos_++];
      }
    }
    if (pos_ >= s_.size()) fail("unterminated literal");
    ++pos_;
    NodeKind kind = NodeKind::Value;
    if (peek() == '@') {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '-')) {
        ++pos_;
      }
    } else if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (peek() != '<') fail("expected datatype IRI");
      const std::string type = iri();
      if (type.starts_with(kXsd)) {
        const std::string_view local = std::string_view(type).substr(kXsd.size());
        for (auto t : kNumericTypes) {
          if (t == local && looks_numeric(value)) kind = NodeKind::Number;
        }
      }
    }
    return {kind, std::move(value)};
  }

  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Traversal traverse_ntriples(std::string_view input) {
  Traversal t = with_root();
  t.hierarchical = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    ++line_no;
    LineParser p(input.substr(start, end - start), line_no);
    start = end + 1;
    if (p.at_end()) continue;
    Term s = p.subject();
    std::string pred = p.predicate();
    Term o = p.object();
    p.finish();
    const std::size_t si = add_spec(t, s.kind, std::move(s.label), "");
    if (o.label.empty()) continue;
    const std::size_t oi = add_spec(t, o.kind, std::move(o.label), "");
    t.edges.push_back({si, oi, std::move(pred)});
  }
  return t;
}

}  // namespace hetsearch::detail
