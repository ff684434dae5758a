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

#include "kvstream/report.hpp"

#include <algorithm>

#include "kvstream/error.hpp"

namespace kvstream::report {

std::string_view to_string(Health h) {
  switch (h) {
    case Health::RED: return "RED";
    case Health::YELLOW: return "YELLOW";
    case Health::GREEN: return "GREEN";
  }
  return "YELLOW";
}

Health health_of(double density, double reciprocity_pct, double tacit_pct,
                 const HealthThresholds& t) {
  if (density < t.red_density_below && reciprocity_pct < t.red_reciprocity_below &&
      tacit_pct > t.red_tacit_above) {
    return Health::RED;
  }
  if (density >= t.green_density_min && reciprocity_pct >= t.green_reciprocity_min) {
    return Health::GREEN;
  }
  return Health::YELLOW;
}

namespace {

std::vector<KnowledgeArea> selected_areas(const Dataset& d, const std::set<AreaId>& filter) {
  for (const auto& id : filter) {
    if (!d.find_area(id)) throw Error(ErrorCode::UnknownArea, "area '" + id + "' not in dataset");
  }
  std::vector<KnowledgeArea> out;
  for (const auto& a : d.areas) {
    if (filter.empty() || filter.contains(a.id)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

FlowFluxRow build_row(const Dataset& d, const KnowledgeArea& area, const Config& cfg) {
  FlowFluxRow row;
  row.area = area.id;
  row.area_name = area.name;
  const auto g = d.flow_graph(area.id);
  std::vector<std::string> notes;
  try {
    row.density = flow::density(g);
  } catch (const Error& e) {
    notes.push_back(e.what());
  }
  try {
    row.reciprocity = flow::reciprocity(g);
  } catch (const Error& e) {
    notes.push_back(e.what());
  }
  try {
    row.split = flow::tacit_explicit_split(g);
  } catch (const Error& e) {
    notes.push_back(e.what());
  }
  const auto decisions = d.decisions_in(area.id);
  if (!decisions.empty()) row.flux = flux::knowledge_flux(g.ties().size(), decisions.size());

  row.insufficient_data = !(row.density && row.reciprocity && row.split);
  for (const auto& n : notes) row.note += (row.note.empty() ? "" : "; ") + n;
  if (row.insufficient_data) return row;

  row.health = health_of(*row.density, *row.reciprocity, row.split->tacit_pct, cfg.health);
  const auto& o = cfg.observations;
  if (*row.reciprocity < o.low_reciprocity_below) row.observations.push_back(observation::kLowReciprocity);
  if (row.split->tacit_pct > o.high_tacit_above) row.observations.push_back(observation::kHighTacit);
  if (!flow::mutual_cliques(g).empty()) row.observations.push_back(observation::kCliques);
  row.observations.push_back(flow::cut_points(g).empty() ? observation::kNoCutPoints
                                                         : observation::kCutPoints);
  if (row.split->explicit_pct > o.high_explicit_above) {
    row.observations.push_back(observation::kHighExplicit);
  }
  return row;
}

}  // namespace

std::vector<FlowFluxRow> build_flow_flux_report(const Dataset& d, const Config& cfg,
                                                const std::set<AreaId>& areas) {
  std::vector<FlowFluxRow> rows;
  for (const auto& area : selected_areas(d, areas)) rows.push_back(build_row(d, area, cfg));
  return rows;
}

std::vector<maturity::MaturityResult> maturity_history(const Dataset& d,
                                                       const maturity::BandConfig& bands) {
  std::vector<Scorecard> cards = d.scorecards;
  std::stable_sort(cards.begin(), cards.end(),
                   [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
  std::vector<maturity::MaturityResult> out;
  for (const auto& c : cards) out.push_back(maturity::cvss_assessment(c, bands));
  return out;
}

ReportBundle build_report_bundle(const Dataset& d, const Config& cfg,
                                 const std::string& generated_at,
                                 const std::set<AreaId>& areas) {
  ReportBundle b;
  b.generated_at = generated_at;
  const auto selected = selected_areas(d, areas);
  const auto top_k = static_cast<std::size_t>(cfg.top_k);

  for (const auto& area : selected) {
    b.rows.push_back(build_row(d, area, cfg));
    const auto g = d.flow_graph(area.id);
    if (g.persons().size() >= 2) b.flow.push_back(flow::flow_summary(g, cfg.flow, top_k));

    const auto decisions = d.decisions_in(area.id);
    if (!decisions.empty()) b.flux.push_back(flux::flux_assessment(area, g, decisions, cfg.flux));

    AreaLcc lcc;
    lcc.distribution = flux::lcc_distribution(decisions, area.id);
    if (lcc.distribution.recorded_total > 0) {
      lcc.uncertainty = flux::uncertainty_from_lcc(decisions, cfg.lcc);
      lcc.favorable_rate = flux::favorable_lcc_rate(decisions);
    }
    try {
      lcc.projection = flux::project_decisions_1d(decisions, d.codebook);
      std::vector<DecisionRecord> recorded;
      for (const auto& x : decisions) {
        if (x.lcc) recorded.push_back(x);
      }
      lcc.dropped_columns = flux::encode_decision_matrix(recorded, d.codebook).dropped_columns;
    } catch (const Error& e) {
      lcc.projection_note = e.what();
    }
    b.lcc.push_back(std::move(lcc));
  }

  std::set<DecisionId> in_scope;
  for (const auto& x : d.decisions) {
    if (areas.empty() || areas.contains(x.area)) in_scope.insert(x.id);
  }
  std::vector<GapAssessment> scoped_gaps;
  for (const auto& g : d.gaps) {
    if (!in_scope.contains(g.decision)) continue;
    scoped_gaps.push_back(g);
    b.gap_scenarios.push_back(scenario::classify_gap_scenario(g));
  }
  std::sort(b.gap_scenarios.begin(), b.gap_scenarios.end(),
            [](const auto& x, const auto& y) { return x.decision < y.decision; });
  for (auto kind : {scenario::GapKind::Efficient, scenario::GapKind::IllusoryProgress,
                    scenario::GapKind::ExcessWaste, scenario::GapKind::Mixed}) {
    b.gap_tally[kind] = 0;
  }
  for (const auto& s : b.gap_scenarios) ++b.gap_tally[s.kind];
  b.perception = scenario::perception_matrix(scoped_gaps);

  b.maturity = maturity_history(d, cfg.bands);
  b.phase = maturity::phase_status(d, b.maturity, cfg.phase_inputs());
  b.waste = maturity::waste_diagnostics(d, cfg.waste_inputs());
  return b;
}

}  // namespace kvstream::report
