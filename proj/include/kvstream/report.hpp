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

// Flow-flux report rows with health assessment, and the full analysis bundle
// rendered by the text/JSON/CSV writers and the SVG charts.

#ifndef KVSTREAM_REPORT_HPP_
#define KVSTREAM_REPORT_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kvstream/config.hpp"
#include "kvstream/flow_metrics.hpp"
#include "kvstream/learning_flux.hpp"
#include "kvstream/maturity.hpp"
#include "kvstream/model.hpp"
#include "kvstream/scenario.hpp"

namespace kvstream::report {

enum class Health { RED, YELLOW, GREEN };

std::string_view to_string(Health h);

// RED: sparse, one-directional and tacit-dominant. GREEN: dense and mutual.
// Everything else is YELLOW.
Health health_of(double density, double reciprocity_pct, double tacit_pct,
                 const HealthThresholds& t = {});

struct FlowFluxRow {
  AreaId area;
  std::string area_name;
  std::optional<double> density;
  std::optional<double> reciprocity;
  std::optional<flow::TacitSplit> split;
  std::optional<double> flux;
  std::vector<std::string> observations;
  std::optional<Health> health;
  bool insufficient_data = false;
  std::string note;
};

// Observation texts produced by the template rules.
namespace observation {
inline constexpr const char* kLowReciprocity =
    "Encourage more reciprocity or mutual knowledge sharing within the team";
inline constexpr const char* kHighTacit =
    "Need to increase reliance on explicit body of knowledge in order to increase "
    "explicit knowledge percentage";
inline constexpr const char* kCliques =
    "Presence of cliques - Conditions ideal for initiating community of practice";
inline constexpr const char* kCutPoints =
    "Single Point Failure Risk - Actions needed to spread their knowledge to others "
    "and also make their knowledge more explicit";
inline constexpr const char* kNoCutPoints = "No single point failures";
inline constexpr const char* kHighExplicit =
    "Need to ensure awareness in team on decision databases";
}  // namespace observation

// One row per area, sorted by area id. Areas whose metrics are undefined
// are marked insufficient_data instead of failing the report.
std::vector<FlowFluxRow> build_flow_flux_report(const Dataset& d, const Config& cfg = {},
                                                const std::set<AreaId>& areas = {});

struct AreaLcc {
  flux::LccDistribution distribution;
  std::optional<double> uncertainty;
  std::optional<double> favorable_rate;
  std::vector<flux::ProjectionPoint> projection;
  std::vector<std::string> dropped_columns;
  std::string projection_note;  // why the projection is empty, if it is
};

struct ReportBundle {
  std::string generated_at;
  std::vector<FlowFluxRow> rows;
  std::vector<flow::FlowSummary> flow;
  std::vector<flux::FluxAssessment> flux;
  std::vector<AreaLcc> lcc;
  std::vector<scenario::GapScenario> gap_scenarios;
  std::map<scenario::GapKind, std::size_t> gap_tally;
  scenario::PerceptionMatrix perception{};
  std::vector<maturity::MaturityResult> maturity;
  maturity::PhaseStatus phase;
  std::vector<maturity::WasteFlag> waste;
};

// Pure function of its inputs; `generated_at` is copied verbatim. An empty
// area filter selects every area.
ReportBundle build_report_bundle(const Dataset& d, const Config& cfg,
                                 const std::string& generated_at,
                                 const std::set<AreaId>& areas = {});

// Scorecards ordered by timestamp, each assessed.
std::vector<maturity::MaturityResult> maturity_history(const Dataset& d,
                                                       const maturity::BandConfig& bands = {});

}  // namespace kvstream::report

#endif  // KVSTREAM_REPORT_HPP_
