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
#include <algorithm>
#include <array>
#include <vector>

#include "hetsearch/text.hpp"
#include "parsers.hpp"

namespace hetsearch::detail {

namespace {

constexpr std::array<std::string_view, 14> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta", "param", "source",
    "track", "wbr"};

bool is_void(std::string_view tag) {
  return std::find(kVoidElements.begin(), kVoidElements.end(), tag) != kVoidElements.end();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
         c == '.';
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string decode_entities(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    const std::size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += s[i++];
      continue;
    }
    const std::string_view name = s.substr(i + 1, semi - i - 1);
    std::string decoded;
    if (name == "amp") {
      decoded = "&";
    } else if (name == "lt") {
      decoded = "<";
    } else if (name == "gt") {
      decoded = ">";
    } else if (name == "quot") {
      decoded = "\"";
    } else if (name == "apos") {
      decoded = "'";
    } else if (name == "nbsp") {
      decoded = " ";
    } else if (name.size() > 1 && name[0] == '#') {
      char32_t cp = 0;
      bool ok = true;
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const std::string_view digits = name.substr(hex ? 2 : 1);
      ok = !digits.empty();
      for (char c : digits) {
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0 || cp > 0x10FFFF) {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(v);
      }
      if (ok && cp > 0 && cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF)) {
        decoded = text::to_utf8(std::u32string(1, cp));
      }
    }
    if (decoded.empty()) {
      out += s[i++];
      continue;
    }
    out += decoded;
    i = semi + 1;
  }
  return out;
}

struct Open {
  std::string tag;
  std::size_t node;
  std::string path;
};

class HtmlReader {
 public:
  explicit HtmlReader(std::string_view in) : in_(in), t_(with_root()) {
    t_.hierarchical = true;
    stack_.push_back({"", 0, ""});
  }

  Traversal run() {
    while (pos_ < in_.size()) {
      if (in_[pos_] == '<') {
        tag();
      } else {
        const std::size_t next = in_.find('<', pos_);
        const std::size_t end = next == std::string_view::npos ? in_.size() : next;
        pending_ += in_.substr(pos_, end - pos_);
        pos_ = end;
      }
    }
    flush_text();
    return std::move(t_);
  }

 private:
  void flush_text() {
    std::string label = text::collapse_whitespace(decode_entities(pending_));
    pending_.clear();
    if (label.empty()) return;
    const Open& parent = stack_.back();
    const std::size_t node = add_spec(t_, NodeKind::Value, std::move(label), parent.path);
    t_.edges.push_back({parent.node, node, ""});
  }

  void skip_past(std::string_view terminator) {
    const std::size_t end = in_.find(terminator, pos_);
    pos_ = end == std::string_view::npos ? in_.size() : end + terminator.size();
  }

  void tag() {
    const std::string_view rest = in_.substr(pos_);
    if (rest.starts_with("<!--")) {
      flush_text();
      pos_ += 4;
      skip_past("-->");
      return;
    }
    if (rest.starts_with("<![CDATA[")) {
      pos_ += 9;
      const std::size_t end = in_.find("]]>", pos_);
      const std::size_t stop = end == std::string_view::npos ? in_.size() : end;
      pending_ += in_.substr(pos_, stop - pos_);
      pos_ = end == std::string_view::npos ? in_.size() : end + 3;
      return;
    }
    if (rest.starts_with("<!") || rest.starts_with("<?")) {
      flush_text();
      skip_past(">");
      return;
    }
    if (rest.starts_with("</")) {
      std::size_t p = pos_ + 2;
      const std::size_t name_start = p;
      while (p < in_.size() && is_name_char(in_[p])) ++p;
      const std::string name = lower_ascii(in_.substr(name_start, p - name_start));
      pos_ = p;
      skip_past(">");
      if (name.empty()) return;
      flush_text();
      close(name);
      return;
    }
    std::size_t p = pos_ + 1;
    const std::size_t name_start = p;
    while (p < in_.size() && is_name_char(in_[p])) ++p;
    if (p == name_start || !std::isalpha(static_cast<unsigned char>(in_[name_start]))) {
      pending_ += '<';
      ++pos_;
      return;
    }
    flush_text();
    const std::string name = lower_ascii(in_.substr(name_start, p - name_start));
    std::vector<std::pair<std::string, std::string>> attributes;
    bool self_closing = false;
    while (p < in_.size() && in_[p] != '>') {
      if (is_space(in_[p])) {
        ++p;
        continue;
      }
      if (in_[p] == '/') {
        self_closing = true;
        ++p;
        continue;
      }
      self_closing = false;
      const std::size_t a = p;
      while (p < in_.size() && !is_space(in_[p]) && in_[p] != '=' && in_[p] != '>' &&
             in_[p] != '/') {
        ++p;
      }
      std::string attr = lower_ascii(in_.substr(a, p - a));
      std::string value;
      while (p < in_.size() && is_space(in_[p])) ++p;
      if (p < in_.size() && in_[p] == '=') {
        ++p;
        while (p < in_.size() && is_space(in_[p])) ++p;
        if (p < in_.size() && (in_[p] == '"' || in_[p] == '\'')) {
          const char q = in_[p++];
          const std::size_t v = p;
          while (p < in_.size() && in_[p] != q) ++p;
          value = std::string(in_.substr(v, p - v));
          if (p < in_.size()) ++p;
        } else {
          const std::size_t v = p;
          while (p < in_.size() && !is_space(in_[p]) && in_[p] != '>') ++p;
          value = std::string(in_.substr(v, p - v));
        }
      }
      if (attr.empty()) {
        ++p;
        continue;
      }
      attributes.emplace_back(std::move(attr), std::move(value));
    }
    pos_ = p < in_.size() ? p + 1 : in_.size();

    if (name == "script" || name == "style") {
      if (!self_closing) {
        const std::string closing = "</" + name;
        std::size_t q = pos_;
        while (true) {
          q = in_.find("</", q);
          if (q == std::string_view::npos) {
            pos_ = in_.size();
            break;
          }
          if (lower_ascii(in_.substr(q, closing.size())) == closing) {
            pos_ = q;
            skip_past(">");
            break;
          }
          q += 2;
        }
      }
      return;
    }

    const Open& parent = stack_.back();
    const std::string path = parent.path + "." + name;
    const std::size_t node = add_spec(t_, NodeKind::Internal, "", path);
    t_.edges.push_back({parent.node, node, name});
    for (auto& [attr, value] : attributes) {
      std::string label = text::collapse_whitespace(decode_entities(value));
      if (label.empty()) continue;
      const std::size_t a = add_spec(t_, NodeKind::Value, std::move(label), path + ".@" + attr);
      t_.edges.push_back({node, a, "@" + attr});
    }
    if (!self_closing && !is_void(name)) stack_.push_back({name, node, path});
  }

  void close(const std::string& name) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i].tag == name) {
        stack_.resize(i);
        return;
      }
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  Traversal t_;
  std::vector<Open> stack_;
  std::string pending_;
};

}  // namespace

Traversal traverse_html(std::string_view input) { return HtmlReader(input).run(); }

}  // namespace hetsearch::detail
