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

#include <span>
#include <string>
#include <vector>

#include "hetsearch/search.hpp"

namespace hetsearch {

/// {"score","ms","conf","spec","edges":[{"src","tgt","label","kind","conf"}],
///  "matches":{keyword: node id}} on one line.
std::string answer_to_json(const Graph& graph, const Answer& answer,
                           const std::vector<std::string>& keywords);

/// One JSON answer per line.
std::string answers_to_json_lines(const Graph& graph, std::span<const Answer> answers,
                                  const std::vector<std::string>& keywords);

/// A digraph with one cluster per answer. Nodes are colored by dataset and
/// sameAs edges are dashed.
std::string answers_to_dot(const Graph& graph, std::span<const Answer> answers);

/// Human-readable listing.
std::string answers_to_text(const Graph& graph, std::span<const Answer> answers,
                            const std::vector<std::string>& keywords);

}  // namespace hetsearch
