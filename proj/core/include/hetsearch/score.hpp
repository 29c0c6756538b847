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
#include <utility>
#include <vector>

#include "hetsearch/graph.hpp"

namespace hetsearch {

struct ScoreParams {
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;

  /// Throws std::invalid_argument unless 0 <= alpha, beta < 1 and
  /// alpha + beta <= 1. The single exception alpha = 1, beta = 0 (pure
  /// matching score) is accepted as well.
  void validate() const;
};

struct ScoreBreakdown {
  double ms = 0.0;
  double conf_prod = 1.0;
  double spec_prod = 1.0;
  double total = 0.0;
};

struct EdgeFactors {
  double confidence = 1.0;
  double specificity = 1.0;
};

/// Mean over keywords of the best similarity between the keyword and the
/// labels matching it. Throws Error when a keyword has no label.
double matching_score(std::span<const std::string> keywords,
                      std::span<const std::vector<std::string>> matched_labels);

/// Products of confidences and specificities; (1, 1) for no edges.
std::pair<double, double> connection_score(std::span<const EdgeFactors> edges);

/// Stored edges contribute their confidence and specificity, sameAs edges 1.
std::pair<double, double> connection_score(const Graph& graph, std::span<const EdgeRef> edges);

EdgeFactors factors(const Graph& graph, const EdgeRef& edge);

/// alpha * ms + beta * conf + (1 - alpha - beta) * spec.
ScoreBreakdown combine(double ms, double conf_prod, double spec_prod, const ScoreParams& params);

}  // namespace hetsearch
