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

#include "kvstream/flow_metrics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "kvstream/error.hpp"

namespace kvstream::flow {

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::CoPReady: return "CoPReady";
    case Quadrant::QuickWin: return "QuickWin";
    case Quadrant::ExpandNetwork: return "ExpandNetwork";
    case Quadrant::Foundational: return "Foundational";
  }
  return "Foundational";
}

double density(const FlowGraph& g) {
  const auto p = g.persons().size();
  if (p < 2) {
    throw Error(ErrorCode::InsufficientActors,
                "area " + g.area() + " has " + std::to_string(p) + " person(s), need 2");
  }
  const auto ties = g.person_ties().size();
  return static_cast<double>(ties) / static_cast<double>(p * (p - 1));
}

double reciprocity(const FlowGraph& g) {
  const auto ties = g.person_ties();
  if (ties.empty()) {
    throw Error(ErrorCode::NoPersonTies, "area " + g.area() + " has no person-to-person ties");
  }
  const auto mutual = std::count_if(ties.begin(), ties.end(), [&](const auto& t) {
    return g.has_tie(t.target, t.source);
  });
  return 100.0 * static_cast<double>(mutual) / static_cast<double>(ties.size());
}

TacitSplit tacit_explicit_split(const FlowGraph& g) {
  const auto total = g.ties().size();
  if (total == 0) throw Error(ErrorCode::NoTies, "area " + g.area() + " has no ties");
  const double tacit = 100.0 * static_cast<double>(g.person_ties().size()) /
                       static_cast<double>(total);
  return {tacit, 100.0 - tacit};
}

// Iterative Hopcroft-Tarjan lowpoint search.
std::vector<ActorId> cut_points(const FlowGraph& g) {
  const auto adj_by_id = g.undirected_projection();
  std::vector<ActorId> ids;
  std::map<ActorId, int> index;
  for (const auto& [id, nbrs] : adj_by_id) {
    if (nbrs.empty()) continue;
    index[id] = static_cast<int>(ids.size());
    ids.push_back(id);
  }
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& w : adj_by_id.at(ids[v])) adj[v].push_back(index.at(w));
  }

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const int done = v;
      stack.pop_back();
      if (stack.empty()) break;
      const int up = stack.back().first;
      low[up] = std::min(low[up], low[done]);
      if (up != root && low[done] >= disc[up]) is_cut[up] = true;
    }
    if (root_children > 1) is_cut[root] = true;
  }

  std::vector<ActorId> out;
  for (int v = 0; v < n; ++v) {
    if (is_cut[v] && g.is_person(ids[v])) out.push_back(ids[v]);
  }
  return out;
}

std::vector<std::vector<ActorId>> mutual_cliques(const FlowGraph& g) {
  const auto adj = g.mutual_person_projection();
  std::vector<std::vector<ActorId>> found;

  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(std::set<ActorId>&, std::set<ActorId>, std::set<ActorId>)> expand =
      [&](std::set<ActorId>& r, std::set<ActorId> p, std::set<ActorId> x) {
        if (p.empty() && x.empty()) {
          if (r.size() >= 3) found.emplace_back(r.begin(), r.end());
          return;
        }
        const ActorId* pivot = nullptr;
        std::size_t best = 0;
        for (const auto* pool : {&p, &x}) {
          for (const auto& u : *pool) {
            const auto& nu = adj.at(u);
            const auto hits = static_cast<std::size_t>(
                std::count_if(p.begin(), p.end(), [&](const auto& v) { return nu.contains(v); }));
            if (!pivot || hits > best) {
              pivot = &u;
              best = hits;
            }
          }
        }
        const auto& pivot_nbrs = adj.at(*pivot);
        std::vector<ActorId> candidates;
        for (const auto& v : p) {
          if (!pivot_nbrs.contains(v)) candidates.push_back(v);
        }
        for (const auto& v : candidates) {
          const auto& nv = adj.at(v);
          std::set<ActorId> p2, x2;
          for (const auto& u : p) if (nv.contains(u)) p2.insert(u);
          for (const auto& u : x) if (nv.contains(u)) x2.insert(u);
          r.insert(v);
          expand(r, std::move(p2), std::move(x2));
          r.erase(v);
          p.erase(v);
          x.insert(v);
        }
      };

  std::set<ActorId> r, p, x;
  for (const auto& [id, nbrs] : adj) {
    if (!nbrs.empty()) p.insert(id);
  }
  expand(r, std::move(p), std::move(x));

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return found;
}

std::vector<ApproachRank> most_approached(const FlowGraph& g, std::size_t k) {
  std::map<ActorId, ApproachRank> acc;
  for (const auto& t : g.ties()) {
    auto& r = acc[t.target];
    r.actor = t.target;
    ++r.in_degree;
    r.weighted_in_degree += t.weight;
  }
  std::vector<ApproachRank> ranked;
  for (auto& [id, r] : acc) ranked.push_back(std::move(r));
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.in_degree != b.in_degree) return a.in_degree > b.in_degree;
    if (a.weighted_in_degree != b.weighted_in_degree) {
      return a.weighted_in_degree > b.weighted_in_degree;
    }
    return a.actor < b.actor;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

Quadrant classify_quadrant(double density, double reciprocity_pct, const Thresholds& t) {
  const bool dense = density >= t.density_hi;
  const bool mutual = reciprocity_pct >= t.reciprocity_hi;
  if (dense && mutual) return Quadrant::CoPReady;
  if (dense) return Quadrant::QuickWin;
  if (mutual) return Quadrant::ExpandNetwork;
  return Quadrant::Foundational;
}

FlowSummary flow_summary(const FlowGraph& g, const Thresholds& t, std::size_t top_k) {
  FlowSummary s;
  s.area = g.area();
  s.density = density(g);
  if (!g.person_ties().empty()) s.reciprocity = reciprocity(g);
  if (!g.ties().empty()) s.split = tacit_explicit_split(g);
  s.cut_points = cut_points(g);
  s.cliques = mutual_cliques(g);
  s.most_approached = most_approached(g, top_k);
  s.quadrant = s.reciprocity ? classify_quadrant(*s.density, *s.reciprocity, t)
                             : Quadrant::Foundational;
  return s;
}

}  // namespace kvstream::flow
