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

#include "kvstream/scenario.hpp"

#include <algorithm>
#include <cstdlib>

#include "kvstream/error.hpp"

namespace kvstream::scenario {

std::string_view to_string(GapKind k) {
  switch (k) {
    case GapKind::Efficient: return "Efficient";
    case GapKind::IllusoryProgress: return "IllusoryProgress";
    case GapKind::ExcessWaste: return "ExcessWaste";
    case GapKind::Mixed: return "Mixed";
  }
  return "Mixed";
}

std::string_view to_string(Alignment a) {
  switch (a) {
    case Alignment::Aligned: return "Aligned";
    case Alignment::ModerateWaste: return "ModerateWaste";
    case Alignment::HighWaste: return "HighWaste";
  }
  return "Aligned";
}

std::string_view to_string(WasteKind w) {
  switch (w) {
    case WasteKind::None: return "None";
    case WasteKind::Illusory: return "Illusory";
    case WasteKind::Excess: return "Excess";
  }
  return "None";
}

std::string_view to_string(PosetRelation r) {
  switch (r) {
    case PosetRelation::Less: return "Less";
    case PosetRelation::Greater: return "Greater";
    case PosetRelation::Equal: return "Equal";
    case PosetRelation::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

std::string_view to_string(LifecycleStage s) {
  switch (s) {
    case LifecycleStage::Infancy: return "infancy";
    case LifecycleStage::Growth: return "growth";
    case LifecycleStage::Maturity: return "maturity";
  }
  return "infancy";
}

LifecycleStage parse_stage(std::string_view s) {
  if (s == "infancy") return LifecycleStage::Infancy;
  if (s == "growth") return LifecycleStage::Growth;
  if (s == "maturity") return LifecycleStage::Maturity;
  throw Error(ErrorCode::ParseError, "unknown lifecycle stage '" + std::string(s) + "'");
}

GapScenario classify_gap_scenario(const GapAssessment& a) {
  GapScenario s;
  s.decision = a.decision;
  for (const auto& g : a.actual) s.unknown_unknowns += a.perceived.contains(g) ? 0 : 1;
  for (const auto& g : a.perceived) s.phantom_gaps += a.actual.contains(g) ? 0 : 1;
  if (s.unknown_unknowns == 0 && s.phantom_gaps == 0) {
    s.kind = GapKind::Efficient;
  } else if (s.phantom_gaps == 0) {
    s.kind = GapKind::IllusoryProgress;
  } else if (s.unknown_unknowns == 0) {
    s.kind = GapKind::ExcessWaste;
  } else {
    s.kind = GapKind::Mixed;
  }
  return s;
}

UVScenario classify_uv(bool needs_uncertain, bool solution_uncertain) {
  if (!needs_uncertain) return solution_uncertain ? UVScenario::UV2 : UVScenario::UV1;
  if (solution_uncertain) return UVScenario::UV3;
  throw Error(ErrorCode::UndefinedScenario,
              "uncertain needs with a certain solution is not a defined UV scenario");
}

PerceptionCell perception_reality_cell(UVScenario perceived, UVScenario actual) {
  PerceptionCell c{perceived, actual, Alignment::Aligned, WasteKind::None};
  const int gap = static_cast<int>(actual) - static_cast<int>(perceived);
  if (gap == 0) return c;
  c.waste_kind = gap > 0 ? WasteKind::Illusory : WasteKind::Excess;
  c.alignment = std::abs(gap) == 2 ? Alignment::HighWaste : Alignment::ModerateWaste;
  return c;
}

Approach recommend_approach(UVScenario uv) {
  switch (uv) {
    case UVScenario::UV1:
      return {"point-based", "point-based serial/concurrent engineering"};
    case UVScenario::UV2:
      return {"set-based", "set-based design, close technical knowledge gaps"};
    case UVScenario::UV3:
      return {"rapid-learning-cycles",
              "rapid learning cycles / fast iterations with customer insight"};
  }
  return {};
}

UVScenario expected_uv_for_stage(LifecycleStage stage) {
  switch (stage) {
    case LifecycleStage::Infancy: return UVScenario::UV3;
    case LifecycleStage::Growth: return UVScenario::UV2;
    case LifecycleStage::Maturity: return UVScenario::UV1;
  }
  return UVScenario::UV3;
}

Poset::Poset(const UncertaintyScale& scale) {
  std::map<LevelId, std::vector<LevelId>> succ;
  for (const auto& l : scale.levels) up_[l];
  for (const auto& [lo, hi] : scale.order) {
    if (!scale.levels.contains(lo) || !scale.levels.contains(hi)) {
      throw Error(ErrorCode::InvalidPoset, "order edge " + lo + " < " + hi +
                                               " uses an undeclared level");
    }
    succ[lo].push_back(hi);
  }
  for (const auto& l : scale.levels) {
    auto& reach = up_[l];
    std::vector<LevelId> frontier(succ[l]);
    while (!frontier.empty()) {
      LevelId v = std::move(frontier.back());
      frontier.pop_back();
      if (!reach.insert(v).second) continue;
      for (const auto& w : succ[v]) frontier.push_back(w);
    }
    if (reach.contains(l)) {
      throw Error(ErrorCode::InvalidPoset, "level " + l + " lies on an order cycle");
    }
  }
}

bool Poset::leq(const LevelId& a, const LevelId& b) const {
  return compare(a, b) == PosetRelation::Less || a == b;
}

PosetRelation Poset::compare(const LevelId& a, const LevelId& b) const {
  auto ia = up_.find(a);
  auto ib = up_.find(b);
  if (ia == up_.end()) throw Error(ErrorCode::UnknownLevel, "level " + a);
  if (ib == up_.end()) throw Error(ErrorCode::UnknownLevel, "level " + b);
  if (a == b) return PosetRelation::Equal;
  if (ia->second.contains(b)) return PosetRelation::Less;
  if (ib->second.contains(a)) return PosetRelation::Greater;
  return PosetRelation::Incomparable;
}

PosetRelation poset_compare(const UncertaintyScale& scale, const LevelId& a,
                            const LevelId& b) {
  return Poset(scale).compare(a, b);
}

UncertaintyScale three_level_scale() {
  return {{"Low", "Medium", "High"}, {{"Low", "Medium"}, {"Medium", "High"}}};
}

UncertaintyScale percentage_scale() {
  UncertaintyScale s;
  for (int i = 0; i <= 100; ++i) {
    s.levels.insert(std::to_string(i));
    if (i > 0) s.order.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return s;
}

PerceptionMatrix perception_matrix(const std::vector<GapAssessment>& gaps) {
  PerceptionMatrix m{};
  for (const auto& g : gaps) {
    if (!g.perceived_uv || !g.actual_uv) continue;
    ++m[static_cast<int>(*g.perceived_uv) - 1][static_cast<int>(*g.actual_uv) - 1];
  }
  return m;
}

}  // namespace kvstream::scenario
