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

// Knowledge-flow graph measures for a single knowledge area.

#ifndef KVSTREAM_FLOW_METRICS_HPP_
#define KVSTREAM_FLOW_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kvstream/model.hpp"

namespace kvstream::flow {

enum class Quadrant { CoPReady, QuickWin, ExpandNetwork, Foundational };

std::string_view to_string(Quadrant q);

struct Thresholds {
  double density_hi = 0.5;
  double reciprocity_hi = 40.0;  // percent
};

struct TacitSplit {
  double tacit_pct = 0.0;
  double explicit_pct = 0.0;
};

struct ApproachRank {
  ActorId actor;
  int in_degree = 0;
  int weighted_in_degree = 0;

  bool operator==(const ApproachRank&) const = default;
};

struct FlowSummary {
  AreaId area;
  std::optional<double> density;
  std::optional<double> reciprocity;
  std::optional<TacitSplit> split;
  std::vector<ActorId> cut_points;
  std::vector<std::vector<ActorId>> cliques;
  std::vector<ApproachRank> most_approached;
  Quadrant quadrant = Quadrant::Foundational;
};

// Person-to-person ties over p(p-1) ordered person pairs.
// Throws Error(InsufficientActors) when fewer than two persons.
double density(const FlowGraph& g);

// Percentage of person-to-person ties whose reverse tie also exists.
// Throws Error(NoPersonTies).
double reciprocity(const FlowGraph& g);

// Share of ties that are person-to-person (tacit) vs person-to-repository
// (explicit). Throws Error(NoTies).
TacitSplit tacit_explicit_split(const FlowGraph& g);

// Persons that are articulation points of the undirected projection of the
// whole graph. Actors without any tie are ignored. Sorted by id.
std::vector<ActorId> cut_points(const FlowGraph& g);

// Maximal cliques of size >= 3 in the mutual person-tie graph, each sorted by
// id; the list is ordered by size descending, then lexicographically.
std::vector<std::vector<ActorId>> mutual_cliques(const FlowGraph& g);

// Top-k actors by in-degree; ties broken by summed incoming weight, then id.
std::vector<ApproachRank> most_approached(const FlowGraph& g, std::size_t k);

Quadrant classify_quadrant(double density, double reciprocity_pct,
                           const Thresholds& t);

// Propagates InsufficientActors; undefined reciprocity or split are recorded
// as empty and force the Foundational quadrant.
FlowSummary flow_summary(const FlowGraph& g, const Thresholds& t = {},
                         std::size_t top_k = 3);

}  // namespace kvstream::flow

#endif  // KVSTREAM_FLOW_METRICS_HPP_
