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

#include <cstdint>
#include <vector>

#include "hetsearch/graph.hpp"

namespace hetsearch {

inline double specificity_value(std::uint64_t n_out, std::uint64_t n_in) {
  return 2.0 / static_cast<double>(n_out + n_in);
}

/// Sets the counters of a freshly inserted Data edge from the tallies of its
/// endpoint sets and refreshes every edge sharing one of its two groups.
/// Idempotent. Graph::add_edge calls it after updating the tallies.
void init_specificity(Graph& graph, EdgeId edge);

/// Joins the self-representing node n2 to the set represented by rep and
/// updates counters per label: edges on either side change only when both
/// sides have edges with that label in the same direction. Returns the
/// edges whose specificity changed, sorted.
std::vector<EdgeId> on_equiv_join(Graph& graph, NodeId rep, NodeId n2);

/// Full recount over the current equivalence sets of both endpoints.
double specificity_naive(const Graph& graph, EdgeId edge);

}  // namespace hetsearch
