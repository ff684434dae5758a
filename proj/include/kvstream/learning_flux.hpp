// Copyright 2026 The kvstream Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Knowledge flux, learning-cycle consequence statistics, decision
// codification and the one-dimensional principal-component projection of
// codified decisions.

#ifndef KVSTREAM_LEARNING_FLUX_HPP_
#define KVSTREAM_LEARNING_FLUX_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kvstream/model.hpp"

namespace kvstream::flux {

enum class Verdict { Optimal, EnhanceFlux, InsufficientData };

std::string_view to_string(Verdict v);

struct FluxConfig {
  // A favorable-outcome rate at or above this is Optimal.
  double favorable_threshold = 0.70;
};

// Severity weight per consequence (c) and per duration (d); the score of one
// outcome is c * d.
struct LccWeights {
  std::array<double, 4> consequence = {0.0, 0.25, 0.6, 1.0};
  std::array<double, 3> duration = {0.5, 0.75, 1.0};

  double of(const LccOutcome& o) const {
    return consequence[static_cast<int>(o.consequence)] *
           duration[static_cast<int>(o.duration)];
  }
};

struct FluxAssessment {
  AreaId area;
  std::size_t tie_count = 0;
  std::size_t decision_count = 0;
  double flux = 0.0;
  std::optional<double> favorable_rate;
  Verdict verdict = Verdict::InsufficientData;
  std::string recommendation;
};

struct LccDistribution {
  AreaId area;
  std::map<std::pair<Consequence, Duration>, std::size_t> counts;
  std::size_t recorded_total = 0;
  std::size_t unrecorded_total = 0;
};

struct EncodedMatrix {
  Eigen::MatrixXd raw;           // before standardization, all columns
  Eigen::MatrixXd standardized;  // zero-variance columns removed
  std::vector<DecisionId> row_ids;
  std::vector<std::string> dim_names;      // columns of `standardized`
  std::vector<std::string> dropped_columns;
  std::vector<std::string> raw_dim_names;  // columns of `raw`
};

struct PrincipalComponent {
  Eigen::VectorXd direction;  // unit length, largest |loading| positive
  double eigenvalue = 0.0;
};

struct ProjectionPoint {
  DecisionId decision;
  double coordinate = 0.0;
  Consequence consequence = Consequence::LC1;
};

// tie_count / decision_count. Throws Error(NoDecisions) when decision_count is 0.
double knowledge_flux(std::size_t tie_count, std::size_t decision_count);

// Fraction of recorded outcomes that are LC1 or LC2.
// Throws Error(NoRecordedOutcomes).
double favorable_lcc_rate(std::span<const DecisionRecord> decisions);

Verdict verdict_for(std::optional<double> favorable_rate, const FluxConfig& cfg = {});

// Throws Error(NoDecisions) when the area has no decisions.
FluxAssessment flux_assessment(const KnowledgeArea& area, const FlowGraph& graph,
                               std::span<const DecisionRecord> decisions,
                               const FluxConfig& cfg = {});

LccDistribution lcc_distribution(std::span<const DecisionRecord> decisions,
                                 AreaId area = {});

// Categorical values are replaced by codebook ordinals, then every column is
// centered and divided by its sample standard deviation. Columns with zero
// variance are dropped and listed in `dropped_columns`.
// Throws Error(HeterogeneousAttributes) or Error(MissingCodebookEntry).
EncodedMatrix encode_decision_matrix(std::span<const DecisionRecord> decisions,
                                     const Codebook& codebook);

// Leading eigenpair of the sample covariance of `data` (rows are
// observations). Throws Error(DegenerateData) for fewer than two rows, no
// columns, or an all-zero covariance.
PrincipalComponent first_principal_component(const Eigen::MatrixXd& data);

// Decisions with a recorded outcome, projected onto the first principal
// component of their standardized attributes; sorted by coordinate.
std::vector<ProjectionPoint> project_decisions_1d(
    std::span<const DecisionRecord> decisions, const Codebook& codebook);

// Mean outcome severity in [0, 1]. Throws Error(NoRecordedOutcomes).
double uncertainty_from_lcc(std::span<const DecisionRecord> decisions,
                            const LccWeights& w = {});

}  // namespace kvstream::flux

#endif  // KVSTREAM_LEARNING_FLUX_HPP_
