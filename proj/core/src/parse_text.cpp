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
#include <cctype>
#include <string_view>

#include "hetsearch/text.hpp"
#include "parsers.hpp"

namespace hetsearch::detail {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

constexpr std::array<std::string_view, 12> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "prof", "st", "mme", "mlle", "jr", "sr", "vs", "etc"};

// A period closing an initial ("P.") or a common abbreviation ends no sentence.
bool is_abbreviation(std::string_view input, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && std::isalpha(static_cast<unsigned char>(input[begin - 1]))) --begin;
  const std::string_view word = input.substr(begin, dot - begin);
  if (word.empty()) return false;
  if (word.size() == 1) return std::isupper(static_cast<unsigned char>(word[0])) != 0;
  std::string lower;
  for (char c : word) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto a : kAbbreviations) {
    if (a == lower) return true;
  }
  return false;
}

}  // namespace

Traversal traverse_text(std::string_view input) {
  Traversal t = with_root();
  t.hierarchical = false;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string sentence = text::collapse_whitespace(input.substr(start, end - start));
    if (!sentence.empty()) {
      const std::size_t node = add_spec(t, NodeKind::Value, std::move(sentence), "");
      t.edges.push_back({0, node, ""});
    }
    start = end;
  };
  for (std::size_t i = 0; i < input.size(); ++i) {
    const char c = input[i];
    if ((c == '.' || c == '!' || c == '?') && (i + 1 == input.size() || is_space(input[i + 1])) &&
        !(c == '.' && is_abbreviation(input, i))) {
      emit(i + 1);
    }
  }
  emit(input.size());
  return t;
}

}  // namespace hetsearch::detail
