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

#include "kvstream/model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

#include "kvstream/error.hpp"

namespace kvstream {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::InsufficientActors: return "InsufficientActors";
    case ErrorCode::NoPersonTies: return "NoPersonTies";
    case ErrorCode::NoTies: return "NoTies";
    case ErrorCode::NoDecisions: return "NoDecisions";
    case ErrorCode::NoRecordedOutcomes: return "NoRecordedOutcomes";
    case ErrorCode::MissingCodebookEntry: return "MissingCodebookEntry";
    case ErrorCode::HeterogeneousAttributes: return "HeterogeneousAttributes";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::UndefinedScenario: return "UndefinedScenario";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::EmptyDimension: return "EmptyDimension";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownArea: return "UnknownArea";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::MissingFile || code == ErrorCode::ParseError ||
         code == ErrorCode::IoError || code == ErrorCode::UnsupportedFormat;
}

FlowGraph::FlowGraph(AreaId area, std::map<ActorId, ActorKind> actors,
                     std::vector<KnowledgeTie> ties)
    : area_(std::move(area)), actors_(std::move(actors)), ties_(std::move(ties)) {
  for (const auto& t : ties_) {
    actors_.try_emplace(t.source, ActorKind::Person);
    actors_.try_emplace(t.target, ActorKind::Person);
    edge_index_.emplace(t.source, t.target);
  }
}

bool FlowGraph::is_person(std::string_view id) const {
  auto it = actors_.find(std::string(id));
  return it != actors_.end() && it->second == ActorKind::Person;
}

bool FlowGraph::has_tie(std::string_view source, std::string_view target) const {
  return edge_index_.contains({std::string(source), std::string(target)});
}

std::vector<ActorId> FlowGraph::persons() const {
  std::vector<ActorId> out;
  for (const auto& [id, kind] : actors_) {
    if (kind == ActorKind::Person) out.push_back(id);
  }
  return out;
}

std::vector<KnowledgeTie> FlowGraph::person_ties() const {
  std::vector<KnowledgeTie> out;
  for (const auto& t : ties_) {
    if (is_person(t.source) && is_person(t.target)) out.push_back(t);
  }
  return out;
}

std::map<ActorId, std::set<ActorId>> FlowGraph::undirected_projection() const {
  std::map<ActorId, std::set<ActorId>> adj;
  for (const auto& [id, kind] : actors_) adj[id];
  for (const auto& t : ties_) {
    if (t.source == t.target) continue;
    adj[t.source].insert(t.target);
    adj[t.target].insert(t.source);
  }
  return adj;
}

std::map<ActorId, std::set<ActorId>> FlowGraph::mutual_person_projection() const {
  std::map<ActorId, std::set<ActorId>> adj;
  for (const auto& id : persons()) adj[id];
  for (const auto& t : person_ties()) {
    if (t.source != t.target && has_tie(t.target, t.source)) {
      adj[t.source].insert(t.target);
      adj[t.target].insert(t.source);
    }
  }
  return adj;
}

const KnowledgeActor* Dataset::find_actor(std::string_view id) const {
  auto it = std::find_if(actors.begin(), actors.end(),
                         [&](const auto& a) { return a.id == id; });
  return it == actors.end() ? nullptr : &*it;
}

const KnowledgeArea* Dataset::find_area(std::string_view id) const {
  auto it = std::find_if(areas.begin(), areas.end(),
                         [&](const auto& a) { return a.id == id; });
  return it == areas.end() ? nullptr : &*it;
}

const DecisionRecord* Dataset::find_decision(std::string_view id) const {
  auto it = std::find_if(decisions.begin(), decisions.end(),
                         [&](const auto& d) { return d.id == id; });
  return it == decisions.end() ? nullptr : &*it;
}

FlowGraph Dataset::flow_graph(std::string_view area) const {
  std::map<ActorId, ActorKind> members;
  auto add = [&](const ActorId& id) {
    if (const auto* a = find_actor(id)) members.emplace(id, a->kind);
  };
  std::vector<KnowledgeTie> area_ties;
  for (const auto& t : ties) {
    if (t.area != area) continue;
    add(t.source);
    add(t.target);
    area_ties.push_back(t);
  }
  for (const auto& d : decisions) {
    if (d.area != area) continue;
    for (const auto& id : d.actors) add(id);
  }
  return FlowGraph(AreaId(area), std::move(members), std::move(area_ties));
}

std::vector<DecisionRecord> Dataset::decisions_in(std::string_view area) const {
  std::vector<DecisionRecord> out;
  std::copy_if(decisions.begin(), decisions.end(), std::back_inserter(out),
               [&](const auto& d) { return d.area == area; });
  return out;
}

std::set<std::string> Dataset::products() const {
  std::set<std::string> out;
  for (const auto& d : decisions) {
    if (!d.product.empty()) out.insert(d.product);
  }
  return out;
}

namespace {

void find_duplicates(const std::vector<std::string>& ids, std::string_view kind,
                     std::vector<Violation>& out) {
  std::map<std::string, int> seen;
  for (const auto& id : ids) ++seen[id];
  for (const auto& [id, count] : seen) {
    if (count > 1) {
      out.push_back({std::string(rules::kIdUnique), std::string(kind) + ":" + id,
                     std::to_string(count) + " records share this id"});
    }
  }
}

// Kahn's algorithm on the Hasse edges; any node left over sits on a cycle.
std::vector<LevelId> levels_on_cycles(const UncertaintyScale& s) {
  std::map<LevelId, int> indegree;
  std::map<LevelId, std::vector<LevelId>> succ;
  for (const auto& l : s.levels) indegree[l];
  for (const auto& [lo, hi] : s.order) {
    indegree[lo];
    ++indegree[hi];
    succ[lo].push_back(hi);
  }
  std::vector<LevelId> ready;
  for (const auto& [l, deg] : indegree) {
    if (deg == 0) ready.push_back(l);
  }
  while (!ready.empty()) {
    LevelId l = ready.back();
    ready.pop_back();
    for (const auto& h : succ[l]) {
      if (--indegree[h] == 0) ready.push_back(h);
    }
  }
  std::vector<LevelId> stuck;
  for (const auto& [l, deg] : indegree) {
    if (deg > 0) stuck.push_back(l);
  }
  return stuck;
}

}  // namespace

std::vector<Violation> validate_dataset(const Dataset& d) {
  std::vector<Violation> out;
  auto add = [&](std::string_view rule, std::string entity, std::string detail) {
    out.push_back({std::string(rule), std::move(entity), std::move(detail)});
  };

  std::vector<std::string> ids;
  for (const auto& a : d.actors) ids.push_back(a.id);
  find_duplicates(ids, "actor", out);
  ids.clear();
  for (const auto& a : d.areas) ids.push_back(a.id);
  find_duplicates(ids, "area", out);
  ids.clear();
  for (const auto& x : d.decisions) ids.push_back(x.id);
  find_duplicates(ids, "decision", out);

  for (const auto& a : d.actors) {
    if (a.id.empty()) add(rules::kIdUnique, "actor:", "empty actor id");
  }

  std::map<std::tuple<AreaId, ActorId, ActorId>, int> tie_keys;
  for (const auto& t : d.ties) {
    const std::string entity = "tie:" + t.area + "/" + t.source + "->" + t.target;
    ++tie_keys[{t.area, t.source, t.target}];
    if (!d.find_area(t.area)) add(rules::kAreaResolves, entity, "unknown area " + t.area);
    const auto* src = d.find_actor(t.source);
    const auto* dst = d.find_actor(t.target);
    if (!src) add(rules::kActorResolves, entity, "unknown source " + t.source);
    if (!dst) add(rules::kActorResolves, entity, "unknown target " + t.target);
    if (src && src->kind == ActorKind::Repository) {
      add(rules::kRepositoryOrigin, entity, t.source + " is a repository");
    }
    if (t.source == t.target) add(rules::kNoSelfTie, entity, "self tie");
    if (t.weight < 1) {
      add(rules::kWeightPositive, entity, "weight " + std::to_string(t.weight));
    }
  }
  for (const auto& [key, count] : tie_keys) {
    if (count > 1) {
      const auto& [area, src, dst] = key;
      add(rules::kTieUnique, "tie:" + area + "/" + src + "->" + dst,
          std::to_string(count) + " duplicate rows");
    }
  }

  const std::set<LevelId> no_levels;
  const auto& levels = d.uncertainty ? d.uncertainty->levels : no_levels;
  for (const auto& x : d.decisions) {
    const std::string entity = "decision:" + x.id;
    if (!d.find_area(x.area)) add(rules::kAreaResolves, entity, "unknown area " + x.area);
    if (x.product.empty()) add(rules::kProductResolves, entity, "empty product id");
    for (const auto& a : x.actors) {
      if (!d.find_actor(a)) add(rules::kActorResolves, entity, "unknown actor " + a);
    }
    for (const auto& [name, value] : x.attributes) {
      if (name.empty()) add(rules::kAttributeName, entity, "empty attribute name");
    }
    if (x.uncertainty && !levels.contains(*x.uncertainty)) {
      add(rules::kLevelResolves, entity, "unknown level " + *x.uncertainty);
    }
  }

  for (const auto& g : d.gaps) {
    const std::string entity = "gaps:" + g.decision;
    if (!d.find_decision(g.decision)) {
      add(rules::kDecisionResolves, entity, "unknown decision " + g.decision);
    }
    auto has_empty = [](const std::set<GapId>& s) { return s.contains(""); };
    if (has_empty(g.actual) || has_empty(g.perceived)) {
      add(rules::kGapIdNonEmpty, entity, "empty gap id");
    }
  }

  for (const auto& s : d.scorecards) {
    if (s.items.empty()) {
      add(rules::kScorecardItems, "scorecard:" + s.team + "@" + s.timestamp,
          "no rated items");
    }
  }

  if (d.uncertainty) {
    for (const auto& [lo, hi] : d.uncertainty->order) {
      for (const auto& end : {lo, hi}) {
        if (!d.uncertainty->levels.contains(end)) {
          add(rules::kOrderEndpoint, "level:" + end, "edge " + lo + " < " + hi);
        }
      }
    }
    for (const auto& l : levels_on_cycles(*d.uncertainty)) {
      add(rules::kOrderAcyclic, "level:" + l, "level lies on an order cycle");
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void bad_value(std::string_view what, std::string_view s) {
  throw Error(ErrorCode::ParseError,
              "unknown " + std::string(what) + " '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(ActorKind k) {
  return k == ActorKind::Person ? "person" : "repository";
}

std::string_view to_string(Consequence c) {
  static constexpr std::string_view names[] = {"LC1", "LC2", "LC3", "LC4"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(Duration d) {
  static constexpr std::string_view names[] = {"short", "medium", "long"};
  return names[static_cast<int>(d)];
}

std::string_view to_string(UVScenario uv) {
  static constexpr std::string_view names[] = {"UV1", "UV2", "UV3"};
  return names[static_cast<int>(uv) - 1];
}

std::string_view to_string(Dimension d) {
  static constexpr std::string_view names[] = {"Create", "Validate", "Store",
                                               "Share", "Use"};
  return names[static_cast<int>(d)];
}

std::string_view to_string(Rating r) {
  static constexpr std::string_view names[] = {"SA", "A", "D", "SD"};
  return names[static_cast<int>(r)];
}

ActorKind parse_actor_kind(std::string_view s) {
  if (s == "person") return ActorKind::Person;
  if (s == "repository") return ActorKind::Repository;
  bad_value("actor kind", s);
}

Consequence parse_consequence(std::string_view s) {
  const auto u = upper(s);
  if (u == "LC1" || u == "LC-1") return Consequence::LC1;
  if (u == "LC2" || u == "LC-2") return Consequence::LC2;
  if (u == "LC3" || u == "LC-3") return Consequence::LC3;
  if (u == "LC4" || u == "LC-4") return Consequence::LC4;
  bad_value("consequence", s);
}

Duration parse_duration(std::string_view s) {
  if (s == "short") return Duration::Short;
  if (s == "medium") return Duration::Medium;
  if (s == "long") return Duration::Long;
  bad_value("duration", s);
}

UVScenario parse_uv(std::string_view s) {
  const auto u = upper(s);
  if (u == "UV1" || u == "UV-1") return UVScenario::UV1;
  if (u == "UV2" || u == "UV-2") return UVScenario::UV2;
  if (u == "UV3" || u == "UV-3") return UVScenario::UV3;
  bad_value("UV scenario", s);
}

Dimension parse_dimension(std::string_view s) {
  const auto u = upper(s);
  for (auto d : kAllDimensions) {
    if (upper(to_string(d)) == u) return d;
  }
  bad_value("CVSS dimension", s);
}

Rating parse_rating(std::string_view s) {
  if (s == "SA") return Rating::SA;
  if (s == "A") return Rating::A;
  if (s == "D") return Rating::D;
  if (s == "SD") return Rating::SD;
  bad_value("rating", s);
}

}  // namespace kvstream
