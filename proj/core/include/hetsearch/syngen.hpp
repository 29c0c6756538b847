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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "hetsearch/store.hpp"

namespace hetsearch::syngen {

inline constexpr const char* kStartLabel = "kwstart";
inline constexpr const char* kEndLabel = "kwend";

/// Path v1 -> ... -> vn labeled "kwstart", "node2", ..., "kwend".
/// Throws std::invalid_argument for n < 2.
IntegratedGraph line(std::size_t n);

/// Like line() with two parallel edges, labeled "a" and "b", per hop.
IntegratedGraph chain(std::size_t n);

/// One path of `branch_len` nodes per branch, each in its own dataset. The
/// inner ends are all labeled "hub" and end up in one equivalence set; the
/// outer end of branch b (1-based) is labeled "kw<b>".
IntegratedGraph star(std::size_t branches, std::size_t branch_len);

/// Preferential attachment: an `m0`-node ring, then every later node links
/// to one existing node picked with probability proportional to its degree.
/// Labels are "node<i>". Requires n > m0 >= 2.
IntegratedGraph barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection on the raw 64-bit stream, so
/// sequences do not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Finds two nodes whose undirected shortest-path distance is `distance`
/// (first source in id order, then the smallest target), relabels them
/// "kwstart" and "kwend" and rebuilds the index. Nullopt when no such pair
/// exists.
std::optional<std::pair<NodeId, NodeId>> place_keywords_at_distance(IntegratedGraph& g,
                                                                   std::size_t distance);

}  // namespace hetsearch::syngen
