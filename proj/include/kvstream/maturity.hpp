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

// CVSS (create, validate, store, share/use) maturity scoring, phase-wise
// deployment status and waste-point diagnostics.

#ifndef KVSTREAM_MATURITY_HPP_
#define KVSTREAM_MATURITY_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kvstream/flow_metrics.hpp"
#include "kvstream/learning_flux.hpp"
#include "kvstream/model.hpp"

namespace kvstream::maturity {

enum class Band { Weak, Marginal, Effective, Robust };

std::string_view to_string(Band b);

// Weak on [0, weak_below), Marginal on [weak_below, marginal_max],
// Effective on (marginal_max, effective_max], Robust above.
struct BandConfig {
  double weak_below = 25.0;
  double marginal_max = 50.0;
  double effective_max = 80.0;
};

struct DimensionResult {
  double score = 0.0;  // percent
  Band band = Band::Weak;
};

struct MaturityResult {
  std::string team;
  std::string timestamp;
  std::map<Dimension, DimensionResult> dimensions;  // absent = not assessed
  double overall = 0.0;
};

struct PhaseRules {
  Band min_band = Band::Effective;
  double optimal_area_fraction = 0.70;
  double efficient_gap_fraction = 0.80;
};

struct RuleEvaluation {
  std::string rule_id;
  int exit_of_phase = 1;
  bool satisfied = false;
  std::string evidence;
};

struct PhaseStatus {
  int current_phase = 1;
  std::vector<RuleEvaluation> rules;
};

struct WasteRules {
  double creation_tacit_pct = 80.0;   // strictly above triggers
  double creation_min_cut_points = 1;
  double validation_unrecorded_fraction = 0.30;  // strictly above triggers
  double sharing_reciprocity_pct = 20.0;         // strictly below triggers
  double learning_cycle_uncertainty = 0.6;       // strictly above triggers
};

struct WasteFlag {
  std::string waste_point;
  bool triggered = false;
  std::string evidence;
  std::vector<AreaId> areas;
};

inline constexpr int kRatingValue[] = {9, 7, 3, 1};  // SA, A, D, SD
inline int rating_value(Rating r) { return kRatingValue[static_cast<int>(r)]; }

// 100 * (sum - n) / (8n) with SA=9, A=7, D=3, SD=1.
// Throws Error(EmptyDimension).
double dimension_score(std::span<const Rating> ratings);

// Throws Error(OutOfRange) outside [0, 100].
Band band_of(double score, const BandConfig& cfg = {});

// Throws Error(EmptyDimension) for a scorecard without items.
MaturityResult cvss_assessment(const Scorecard& s, const BandConfig& cfg = {});

struct PhaseInputs {
  PhaseRules rules;
  flux::FluxConfig flux;
};

PhaseStatus phase_status(const Dataset& d, std::span<const MaturityResult> history,
                         const PhaseInputs& in = {});

struct WasteInputs {
  WasteRules rules;
  flux::LccWeights weights;
};

std::vector<WasteFlag> waste_diagnostics(const Dataset& d, const WasteInputs& in = {});

}  // namespace kvstream::maturity

#endif  // KVSTREAM_MATURITY_HPP_
