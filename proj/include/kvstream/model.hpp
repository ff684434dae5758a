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

// Domain types for knowledge-flow datasets: actors, areas, ties, codified
// design decisions, gap assessments, CVSS scorecards and uncertainty scales.
// A Dataset is built once by the loader and treated as immutable afterwards.

#ifndef KVSTREAM_MODEL_HPP_
#define KVSTREAM_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kvstream {

using ActorId = std::string;
using AreaId = std::string;
using DecisionId = std::string;
using GapId = std::string;
using LevelId = std::string;

enum class ActorKind { Person, Repository };

struct KnowledgeActor {
  ActorId id;
  std::string name;
  ActorKind kind = ActorKind::Person;

  bool operator==(const KnowledgeActor&) const = default;
};

struct KnowledgeArea {
  AreaId id;
  std::string name;

  bool operator==(const KnowledgeArea&) const = default;
};

// Directed "source approaches target" edge within one knowledge area.
// Weight expresses preference and only matters for the weighted
// most-approached ranking.
struct KnowledgeTie {
  AreaId area;
  ActorId source;
  ActorId target;
  int weight = 1;

  bool operator==(const KnowledgeTie&) const = default;
};

// Per-area directed graph. Every tie endpoint is a member of `actors`.
class FlowGraph {
 public:
  FlowGraph() = default;
  FlowGraph(AreaId area, std::map<ActorId, ActorKind> actors,
            std::vector<KnowledgeTie> ties);

  const AreaId& area() const { return area_; }
  const std::map<ActorId, ActorKind>& actors() const { return actors_; }
  const std::vector<KnowledgeTie>& ties() const { return ties_; }

  bool is_person(std::string_view id) const;
  bool has_tie(std::string_view source, std::string_view target) const;

  std::vector<ActorId> persons() const;
  // Ties whose both endpoints are persons.
  std::vector<KnowledgeTie> person_ties() const;
  // Undirected adjacency over all actors; an edge exists if a tie exists in
  // either direction.
  std::map<ActorId, std::set<ActorId>> undirected_projection() const;
  // Undirected adjacency over persons, an edge for each mutual tie pair.
  std::map<ActorId, std::set<ActorId>> mutual_person_projection() const;

 private:
  AreaId area_;
  std::map<ActorId, ActorKind> actors_;
  std::vector<KnowledgeTie> ties_;
  std::set<std::pair<ActorId, ActorId>> edge_index_;
};

enum class Consequence { LC1, LC2, LC3, LC4 };
enum class Duration { Short, Medium, Long };

struct LccOutcome {
  Consequence consequence = Consequence::LC1;
  Duration duration = Duration::Short;

  bool operator==(const LccOutcome&) const = default;
};

// Numeric value or categorical code.
using AttributeValue = std::variant<double, std::string>;

struct DecisionRecord {
  DecisionId id;
  std::string product;
  AreaId area;
  std::map<std::string, AttributeValue> attributes;
  std::set<ActorId> actors;
  std::optional<LccOutcome> lcc;
  std::optional<LevelId> uncertainty;

  bool operator==(const DecisionRecord&) const = default;
};

enum class UVScenario { UV1 = 1, UV2 = 2, UV3 = 3 };

struct GapAssessment {
  DecisionId decision;
  std::set<GapId> actual;
  std::set<GapId> perceived;
  // Optional perceived and actual uncertainty-variability scenario for the
  // same decision, feeding the perception-reality matrix.
  std::optional<UVScenario> perceived_uv;
  std::optional<UVScenario> actual_uv;

  bool operator==(const GapAssessment&) const = default;
};

enum class Dimension { Create, Validate, Store, Share, Use };
enum class Rating { SA, A, D, SD };

inline constexpr Dimension kAllDimensions[] = {
    Dimension::Create, Dimension::Validate, Dimension::Store, Dimension::Share,
    Dimension::Use};

struct ScorecardItem {
  Dimension dimension = Dimension::Create;
  std::string statement;
  Rating rating = Rating::SD;

  bool operator==(const ScorecardItem&) const = default;
};

struct Scorecard {
  std::string team;
  std::string timestamp;  // ISO-8601
  std::vector<ScorecardItem> items;

  bool operator==(const Scorecard&) const = default;
};

// Levels plus Hasse-diagram edges (lower, higher). The order relation is the
// reflexive-transitive closure of the edges.
struct UncertaintyScale {
  std::set<LevelId> levels;
  std::vector<std::pair<LevelId, LevelId>> order;

  bool operator==(const UncertaintyScale&) const = default;
};

// attribute name -> (category -> ordinal)
using Codebook = std::map<std::string, std::map<std::string, double>>;

struct Dataset {
  std::vector<KnowledgeActor> actors;
  std::vector<KnowledgeArea> areas;
  std::vector<KnowledgeTie> ties;
  std::vector<DecisionRecord> decisions;
  std::vector<GapAssessment> gaps;
  std::vector<Scorecard> scorecards;
  std::optional<UncertaintyScale> uncertainty;
  Codebook codebook;

  bool operator==(const Dataset&) const = default;

  const KnowledgeActor* find_actor(std::string_view id) const;
  const KnowledgeArea* find_area(std::string_view id) const;
  const DecisionRecord* find_decision(std::string_view id) const;

  // Area graph: endpoints of the area's ties plus actors involved in the
  // area's decisions.
  FlowGraph flow_graph(std::string_view area) const;
  std::vector<DecisionRecord> decisions_in(std::string_view area) const;
  std::set<std::string> products() const;
};

struct Violation {
  std::string rule;
  std::string entity;
  std::string detail;

  auto operator<=>(const Violation&) const = default;
};

// Rule names reported by validate_dataset.
namespace rules {
inline constexpr std::string_view kIdUnique = "id unique";
inline constexpr std::string_view kRepositoryOrigin =
    "repository actors never originate ties";
inline constexpr std::string_view kNoSelfTie = "source differs from target";
inline constexpr std::string_view kTieUnique = "tie unique per (area, source, target)";
inline constexpr std::string_view kWeightPositive = "weight at least 1";
inline constexpr std::string_view kActorResolves = "actor id resolves";
inline constexpr std::string_view kAreaResolves = "area id resolves";
inline constexpr std::string_view kProductResolves = "product id resolves";
inline constexpr std::string_view kAttributeName = "attribute names non-empty";
inline constexpr std::string_view kDecisionResolves = "decision id resolves";
inline constexpr std::string_view kGapIdNonEmpty = "gap ids non-empty";
inline constexpr std::string_view kLevelResolves = "uncertainty level resolves";
inline constexpr std::string_view kOrderEndpoint =
    "order endpoints are declared levels";
inline constexpr std::string_view kOrderAcyclic = "uncertainty order acyclic";
inline constexpr std::string_view kScorecardItems = "scorecard has items";
}  // namespace rules

// Checks every dataset invariant. The result is sorted and independent of
// input row order; an empty vector means the dataset is valid.
std::vector<Violation> validate_dataset(const Dataset& d);

std::string_view to_string(ActorKind k);
std::string_view to_string(Consequence c);
std::string_view to_string(Duration d);
std::string_view to_string(UVScenario uv);
std::string_view to_string(Dimension d);
std::string_view to_string(Rating r);

// Parsers throw Error(ParseError) on unknown names.
ActorKind parse_actor_kind(std::string_view s);
Consequence parse_consequence(std::string_view s);
Duration parse_duration(std::string_view s);
UVScenario parse_uv(std::string_view s);
Dimension parse_dimension(std::string_view s);
Rating parse_rating(std::string_view s);

}  // namespace kvstream

#endif  // KVSTREAM_MODEL_HPP_
