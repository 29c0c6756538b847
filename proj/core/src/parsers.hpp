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

#include <string>
#include <string_view>

#include "hetsearch/ingest.hpp"

namespace hetsearch::detail {

Traversal traverse_json(std::string_view input);
Traversal traverse_csv(std::string_view input);
Traversal traverse_ntriples(std::string_view input);
Traversal traverse_text(std::string_view input);
Traversal traverse_html(std::string_view input);

/// Integer or decimal, optional sign and exponent.
bool looks_numeric(std::string_view s);

/// Appends a node occurrence and returns its index.
inline std::size_t add_spec(Traversal& t, NodeKind kind, std::string label, std::string path) {
  t.nodes.push_back(NodeSpec{kind, std::move(label), std::move(path)});
  return t.nodes.size() - 1;
}

inline Traversal with_root() {
  Traversal t;
  add_spec(t, NodeKind::DatasetRoot, "", "");
  return t;
}

}  // namespace hetsearch::detail
