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

#include <nlohmann/json.hpp>

#include "hetsearch/error.hpp"
#include "parsers.hpp"

namespace hetsearch::detail {

namespace {

using Json = nlohmann::ordered_json;

std::size_t line_of(std::string_view input, std::size_t byte) {
  byte = std::min(byte, input.size());
  return 1 + static_cast<std::size_t>(std::count(input.begin(), input.begin() + byte, '\n'));
}

// Returns the occurrence index of the node made for `value`, or nothing for
// null and empty strings.
std::optional<std::size_t> visit(Traversal& t, const Json& value, const std::string& path) {
  switch (value.type()) {
    case Json::value_t::null:
      return std::nullopt;
    case Json::value_t::object: {
      const std::size_t self = add_spec(t, NodeKind::Internal, "", path);
      for (const auto& [key, child] : value.items()) {
        const std::string child_path = path + "." + key;
        if (const auto c = visit(t, child, child_path)) {
          t.edges.push_back({self, *c, key});
        }
      }
      return self;
    }
    case Json::value_t::array: {
      const std::size_t self = add_spec(t, NodeKind::Internal, "", path);
      for (const auto& child : value) {
        if (const auto c = visit(t, child, path)) t.edges.push_back({self, *c, ""});
      }
      return self;
    }
    case Json::value_t::string: {
      const auto& s = value.get_ref<const std::string&>();
      if (s.empty()) return std::nullopt;
      return add_spec(t, NodeKind::Value, s, path);
    }
    case Json::value_t::boolean:
      return add_spec(t, NodeKind::Value, value.get<bool>() ? "true" : "false", path);
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::number_float:
      return add_spec(t, NodeKind::Number, value.dump(), path);
    default:
      return std::nullopt;
  }
}

}  // namespace

Traversal traverse_json(std::string_view input) {
  Json doc;
  try {
    doc = Json::parse(input.begin(), input.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of(input, e.byte));
  }
  Traversal t = with_root();
  if (const auto top = visit(t, doc, "")) t.edges.push_back({0, *top, ""});
  return t;
}

}  // namespace hetsearch::detail
