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

// Perception-versus-reality analysis: knowledge-gap set scenarios,
// uncertainty-variability (UV) typing, the perception-reality matrix and
// partially ordered uncertainty scales.

#ifndef KVSTREAM_SCENARIO_HPP_
#define KVSTREAM_SCENARIO_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kvstream/model.hpp"

namespace kvstream::scenario {

enum class GapKind { Efficient, IllusoryProgress, ExcessWaste, Mixed };

struct GapScenario {
  DecisionId decision;
  GapKind kind = GapKind::Efficient;
  std::size_t unknown_unknowns = 0;  // |actual \ perceived|
  std::size_t phantom_gaps = 0;      // |perceived \ actual|
};

enum class Alignment { Aligned, ModerateWaste, HighWaste };
enum class WasteKind { None, Illusory, Excess };

struct PerceptionCell {
  UVScenario perceived = UVScenario::UV1;
  UVScenario actual = UVScenario::UV1;
  Alignment alignment = Alignment::Aligned;
  WasteKind waste_kind = WasteKind::None;

  bool operator==(const PerceptionCell&) const = default;
};

struct Approach {
  std::string name;
  std::string description;
};

enum class LifecycleStage { Infancy, Growth, Maturity };

enum class PosetRelation { Less, Greater, Equal, Incomparable };

std::string_view to_string(GapKind k);
std::string_view to_string(Alignment a);
std::string_view to_string(WasteKind w);
std::string_view to_string(PosetRelation r);
std::string_view to_string(LifecycleStage s);
LifecycleStage parse_stage(std::string_view s);

GapScenario classify_gap_scenario(const GapAssessment& a);

// Throws Error(UndefinedScenario) for uncertain needs with a certain solution.
UVScenario classify_uv(bool needs_uncertain, bool solution_uncertain);

PerceptionCell perception_reality_cell(UVScenario perceived, UVScenario actual);

Approach recommend_approach(UVScenario uv);

UVScenario expected_uv_for_stage(LifecycleStage stage);

// Reachability over the Hasse diagram of a validated scale. Construction
// throws Error(InvalidPoset) on cycles or undeclared endpoints.
class Poset {
 public:
  explicit Poset(const UncertaintyScale& scale);

  // Throws Error(UnknownLevel) for undeclared levels.
  PosetRelation compare(const LevelId& a, const LevelId& b) const;
  bool leq(const LevelId& a, const LevelId& b) const;

 private:
  std::map<LevelId, std::set<LevelId>> up_;  // strict upper sets
};

PosetRelation poset_compare(const UncertaintyScale& scale, const LevelId& a,
                            const LevelId& b);

// Low < Medium < High.
UncertaintyScale three_level_scale();
// "0" < "1" < ... < "100".
UncertaintyScale percentage_scale();

// Counts of (perceived, actual) pairs, indexed [perceived-1][actual-1].
using PerceptionMatrix = std::array<std::array<std::size_t, 3>, 3>;
PerceptionMatrix perception_matrix(const std::vector<GapAssessment>& gaps);

}  // namespace kvstream::scenario

#endif  // KVSTREAM_SCENARIO_HPP_
