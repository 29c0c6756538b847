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
#include "hetsearch/score.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetsearch/error.hpp"
#include "hetsearch/link.hpp"

namespace hetsearch {

void ScoreParams::validate() const {
  const bool in_range = alpha >= 0.0 && beta >= 0.0 && alpha < 1.0 && beta < 1.0;
  const bool pure_matching = alpha == 1.0 && beta == 0.0;
  if (!(in_range || pure_matching) || alpha + beta > 1.0 + 1e-12) {
    throw std::invalid_argument("score weights need 0 <= alpha, beta < 1 and alpha + beta <= 1");
  }
}

double matching_score(std::span<const std::string> keywords,
                      std::span<const std::vector<std::string>> matched_labels) {
  if (keywords.size() != matched_labels.size()) {
    throw Error("matching score: one label list per keyword expected");
  }
  if (keywords.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    if (matched_labels[i].empty()) throw Error("keyword '" + keywords[i] + "' is not matched");
    double best = 0.0;
    for (const auto& label : matched_labels[i]) {
      best = std::max(best, label_similarity(label, keywords[i]));
    }
    sum += best;
  }
  return sum / static_cast<double>(keywords.size());
}

std::pair<double, double> connection_score(std::span<const EdgeFactors> edges) {
  double conf = 1.0;
  double spec = 1.0;
  for (const auto& e : edges) {
    conf *= e.confidence;
    spec *= e.specificity;
  }
  return {conf, spec};
}

EdgeFactors factors(const Graph& graph, const EdgeRef& edge) {
  if (edge.kind == EdgeKind::SameAs) return {1.0, 1.0};
  const Edge& e = graph.edge(edge.id);
  return {e.confidence, e.specificity};
}

std::pair<double, double> connection_score(const Graph& graph, std::span<const EdgeRef> edges) {
  std::vector<EdgeFactors> f;
  f.reserve(edges.size());
  for (const auto& e : edges) f.push_back(factors(graph, e));
  return connection_score(f);
}

ScoreBreakdown combine(double ms, double conf_prod, double spec_prod, const ScoreParams& params) {
  ScoreBreakdown b;
  b.ms = ms;
  b.conf_prod = conf_prod;
  b.spec_prod = spec_prod;
  b.total = params.alpha * ms + params.beta * conf_prod +
            (1.0 - params.alpha - params.beta) * spec_prod;
  return b;
}

}  // namespace hetsearch
