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

#include "kvstream/maturity.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "kvstream/error.hpp"
#include "kvstream/scenario.hpp"

namespace kvstream::maturity {

namespace {

std::string fmt(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

std::string_view to_string(Band b) {
  switch (b) {
    case Band::Weak: return "Weak";
    case Band::Marginal: return "Marginal";
    case Band::Effective: return "Effective";
    case Band::Robust: return "Robust";
  }
  return "Weak";
}

double dimension_score(std::span<const Rating> ratings) {
  if (ratings.empty()) throw Error(ErrorCode::EmptyDimension, "no rated items");
  const int n = static_cast<int>(ratings.size());
  const int sum = std::accumulate(ratings.begin(), ratings.end(), 0,
                                  [](int acc, Rating r) { return acc + rating_value(r); });
  return 100.0 * static_cast<double>(sum - n) / static_cast<double>(8 * n);
}

Band band_of(double score, const BandConfig& cfg) {
  if (!(score >= 0.0 && score <= 100.0)) {
    throw Error(ErrorCode::OutOfRange, "score " + fmt(score) + " outside [0, 100]");
  }
  if (score < cfg.weak_below) return Band::Weak;
  if (score <= cfg.marginal_max) return Band::Marginal;
  if (score <= cfg.effective_max) return Band::Effective;
  return Band::Robust;
}

MaturityResult cvss_assessment(const Scorecard& s, const BandConfig& cfg) {
  if (s.items.empty()) {
    throw Error(ErrorCode::EmptyDimension, "scorecard of " + s.team + " has no items");
  }
  MaturityResult r{s.team, s.timestamp, {}, 0.0};
  std::map<Dimension, std::vector<Rating>> by_dim;
  for (const auto& item : s.items) by_dim[item.dimension].push_back(item.rating);
  double total = 0.0;
  for (const auto& [dim, ratings] : by_dim) {
    const double score = dimension_score(ratings);
    r.dimensions[dim] = {score, band_of(score, cfg)};
    total += score;
  }
  r.overall = total / static_cast<double>(r.dimensions.size());
  return r;
}

PhaseStatus phase_status(const Dataset& d, std::span<const MaturityResult> history,
                         const PhaseInputs& in) {
  PhaseStatus st;
  auto add = [&](std::string id, int phase, bool ok, std::string evidence) {
    st.rules.push_back({std::move(id), phase, ok, std::move(evidence)});
  };

  add("dataset_present", 1, !d.actors.empty() || !d.areas.empty(),
      std::to_string(d.actors.size()) + " actors, " + std::to_string(d.areas.size()) + " areas");

  add("baseline_assessment", 2, !history.empty(),
      std::to_string(history.size()) + " maturity assessment(s) on record");

  std::vector<std::string> not_computable;
  for (const auto& area : d.areas) {
    const auto g = d.flow_graph(area.id);
    try {
      flow::density(g);
      flow::reciprocity(g);
    } catch (const Error&) {
      not_computable.push_back(area.id);
    }
  }
  add("flow_baseline", 2, !d.areas.empty() && not_computable.empty(),
      not_computable.empty() ? "flow metrics computable for " + std::to_string(d.areas.size()) + " area(s)"
                             : "flow metrics undefined for: " + join(not_computable));

  bool dims_ok = false;
  std::string dims_evidence = "no assessment";
  if (!history.empty()) {
    const auto& latest = history.back();
    std::vector<std::string> below;
    for (const auto& [dim, res] : latest.dimensions) {
      if (res.band < in.rules.min_band) {
        below.push_back(std::string(to_string(dim)) + " " + std::string(to_string(res.band)));
      }
    }
    dims_ok = !latest.dimensions.empty() && below.empty();
    dims_evidence = below.empty()
                        ? std::to_string(latest.dimensions.size()) + " assessed dimension(s) at or above " +
                              std::string(to_string(in.rules.min_band))
                        : "below " + std::string(to_string(in.rules.min_band)) + ": " + join(below);
  }
  add("dimensions_effective", 3, dims_ok, dims_evidence);

  std::size_t optimal = 0;
  for (const auto& area : d.areas) {
    const auto decisions = d.decisions_in(area.id);
    if (decisions.empty()) continue;
    const auto a = flux::flux_assessment(area, d.flow_graph(area.id), decisions, in.flux);
    if (a.verdict == flux::Verdict::Optimal) ++optimal;
  }
  const double optimal_frac =
      d.areas.empty() ? 0.0 : static_cast<double>(optimal) / static_cast<double>(d.areas.size());
  add("flux_optimal", 4, !d.areas.empty() && optimal_frac >= in.rules.optimal_area_fraction,
      std::to_string(optimal) + " of " + std::to_string(d.areas.size()) + " area(s) Optimal");

  std::size_t efficient = 0;
  for (const auto& g : d.gaps) {
    if (scenario::classify_gap_scenario(g).kind == scenario::GapKind::Efficient) ++efficient;
  }
  const double efficient_frac =
      d.gaps.empty() ? 0.0 : static_cast<double>(efficient) / static_cast<double>(d.gaps.size());
  add("gaps_efficient", 4, !d.gaps.empty() && efficient_frac >= in.rules.efficient_gap_fraction,
      std::to_string(efficient) + " of " + std::to_string(d.gaps.size()) +
          " gap assessment(s) Efficient");

  st.current_phase = 5;
  for (int phase = 1; phase <= 4; ++phase) {
    const bool unmet = std::any_of(st.rules.begin(), st.rules.end(), [&](const auto& r) {
      return r.exit_of_phase == phase && !r.satisfied;
    });
    if (unmet) {
      st.current_phase = phase;
      break;
    }
  }
  return st;
}

std::vector<WasteFlag> waste_diagnostics(const Dataset& d, const WasteInputs& in) {
  const auto& r = in.rules;
  WasteFlag creation{"Creation", false, "", {}};
  WasteFlag validation{"Validation", false, "", {}};
  WasteFlag sharing{"Sharing", false, "", {}};
  WasteFlag wishful{"Wishful Thinking", false, "", {}};
  WasteFlag learning{"Learning Cycle", false, "", {}};

  std::vector<std::string> creation_ev, sharing_ev, learning_ev;
  for (const auto& area : d.areas) {
    const auto g = d.flow_graph(area.id);
    if (!g.ties().empty()) {
      const auto split = flow::tacit_explicit_split(g);
      const auto cuts = flow::cut_points(g);
      if (split.tacit_pct > r.creation_tacit_pct &&
          static_cast<double>(cuts.size()) >= r.creation_min_cut_points) {
        creation.areas.push_back(area.id);
        creation_ev.push_back(area.id + " tacit " + fmt(split.tacit_pct, 1) + "%, " +
                              std::to_string(cuts.size()) + " cut point(s)");
      }
    }
    if (!g.person_ties().empty()) {
      const double rec = flow::reciprocity(g);
      if (rec < r.sharing_reciprocity_pct) {
        sharing.areas.push_back(area.id);
        sharing_ev.push_back(area.id + " reciprocity " + fmt(rec, 1) + "%");
      }
    }
    const auto decisions = d.decisions_in(area.id);
    if (std::any_of(decisions.begin(), decisions.end(), [](const auto& x) { return x.lcc.has_value(); })) {
      const double u = flux::uncertainty_from_lcc(decisions, in.weights);
      if (u > r.learning_cycle_uncertainty) {
        learning.areas.push_back(area.id);
        learning_ev.push_back(area.id + " uncertainty " + fmt(u, 3));
      }
    }
  }
  creation.triggered = !creation.areas.empty();
  creation.evidence = creation.triggered ? join(creation_ev) : "no tacit-heavy area with cut points";
  sharing.triggered = !sharing.areas.empty();
  sharing.evidence = sharing.triggered ? join(sharing_ev) : "reciprocity adequate in every area";
  learning.triggered = !learning.areas.empty();
  learning.evidence = learning.triggered ? join(learning_ev) : "learning-cycle uncertainty within bounds";

  const auto unrecorded = static_cast<std::size_t>(std::count_if(
      d.decisions.begin(), d.decisions.end(), [](const auto& x) { return !x.lcc.has_value(); }));
  const double frac = d.decisions.empty()
                          ? 0.0
                          : static_cast<double>(unrecorded) / static_cast<double>(d.decisions.size());
  validation.triggered = frac > r.validation_unrecorded_fraction;
  validation.evidence = std::to_string(unrecorded) + " of " + std::to_string(d.decisions.size()) +
                        " decision(s) lack a recorded outcome";

  std::vector<std::string> wishful_ids;
  for (const auto& g : d.gaps) {
    if (!g.actual.empty() && g.perceived.empty()) wishful_ids.push_back(g.decision);
  }
  std::sort(wishful_ids.begin(), wishful_ids.end());
  wishful.triggered = !wishful_ids.empty();
  wishful.evidence = wishful.triggered ? "gaps never surfaced for: " + join(wishful_ids)
                                       : "every decision with actual gaps surfaced some";

  return {creation, validation, sharing, wishful, learning};
}

}  // namespace kvstream::maturity
