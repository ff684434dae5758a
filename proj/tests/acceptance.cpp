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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kvstream/cli.hpp"
#include "kvstream/error.hpp"
#include "kvstream/flow_metrics.hpp"
#include "kvstream/learning_flux.hpp"
#include "kvstream/maturity.hpp"
#include "kvstream/render.hpp"
#include "kvstream/report.hpp"
#include "kvstream/scenario.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kvstream;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failure reasons for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void flux_arithmetic(Check& c) {
  const auto t0 = Clock::now();
  const double a = flux::knowledge_flux(25, 100);
  const double b = flux::knowledge_flux(69, 75);
  const double elapsed = seconds_since(t0);
  c.expect(a == 0.25, "flux(25,100) = " + fmt(a));
  c.expect(std::abs(b - 0.92) <= 1e-4, "flux(69,75) = " + fmt(b));
  c.expect(elapsed < 1e-3, "took " + fmt(elapsed) + " s");
}

void cvss_example(Check& c) {
  using enum Rating;
  const std::vector<Rating> create{SD, D, A, SA};
  const double s = maturity::dimension_score(create);
  c.expect(s == 50.0, "score = " + fmt(s));
  const std::vector<std::pair<double, maturity::Band>> bands{
      {24.9, maturity::Band::Weak},      {25, maturity::Band::Marginal},
      {50, maturity::Band::Marginal},    {50.5, maturity::Band::Effective},
      {80, maturity::Band::Effective},   {80.1, maturity::Band::Robust}};
  for (const auto& [v, want] : bands) {
    const auto got = maturity::band_of(v);
    c.expect(got == want, "band_of(" + fmt(v) + ") = " + std::string(maturity::to_string(got)));
  }
}

void health_rows(Check& c) {
  using report::Health;
  struct Row {
    double density, reciprocity, tacit;
    Health want;
  };
  const Row rows[] = {{0.28, 14, 72, Health::RED},
                      {0.45, 31, 12, Health::YELLOW},
                      {0.81, 60, 64, Health::GREEN},
                      {0.32, 15, 32, Health::YELLOW}};
  for (const auto& r : rows) {
    const auto got = report::health_of(r.density, r.reciprocity, r.tacit);
    c.expect(got == r.want, "(" + fmt(r.density) + ", " + fmt(r.reciprocity) + ", " + fmt(r.tacit) +
                                ") -> " + std::string(report::to_string(got)));
  }
}

void graph_oracles(Check& c) {
  const auto t0 = Clock::now();
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto pg = oracle::random_graph(rng);
    const auto g = pg.to_flow_graph();
    const std::string id = "graph " + std::to_string(i);
    if (oracle::person_count(pg) >= 2) {
      c.expect(flow::density(g) == oracle::density(pg), id + " density");
    }
    if (!g.person_ties().empty()) {
      c.expect(flow::reciprocity(g) == oracle::reciprocity(pg), id + " reciprocity");
    }
    if (!pg.edges.empty()) {
      const auto split = flow::tacit_explicit_split(g);
      c.expect(split.tacit_pct == oracle::tacit_pct(pg), id + " tacit split");
      c.expect(split.explicit_pct == 100.0 - oracle::tacit_pct(pg), id + " explicit split");
    }
    c.expect(flow::cut_points(g) == oracle::cut_points(pg), id + " cut points");
    c.expect(flow::mutual_cliques(g) == oracle::mutual_cliques(pg), id + " cliques");
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 5.0, "took " + fmt(elapsed) + " s");
}

void pca(Check& c) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_int_distribution<int> rows(3, 40);
  for (int t = 0; t < 100; ++t) {
    const int n = rows(rng);
    const double slope = u(rng) / 4.0;
    std::vector<double> xs, ys;
    Eigen::MatrixXd m(n, 2);
    for (int i = 0; i < n; ++i) {
      xs.push_back(u(rng));
      ys.push_back(slope * xs.back() + u(rng) / 2.0);
      m(i, 0) = xs.back();
      m(i, 1) = ys.back();
    }
    double a, b, cc;
    oracle::covariance_2(xs, ys, a, b, cc);
    const auto want = oracle::leading_eigen_2x2(a, b, cc);
    const auto got = flux::first_principal_component(m);
    const std::string id = "dataset " + std::to_string(t);
    c.expect(std::abs(got.eigenvalue - want.lambda) <= 1e-9, id + " eigenvalue");
    c.expect(std::abs(got.direction(0) - want.x) <= 1e-9 && std::abs(got.direction(1) - want.y) <= 1e-9,
             id + " direction");
    const Eigen::MatrixXd centered = m.rowwise() - m.colwise().mean();
    const Eigen::VectorXd proj = centered * got.direction;
    c.expect(std::abs(proj.squaredNorm() / (n - 1) - got.eigenvalue) <= 1e-9, id + " projection variance");
  }

  Eigen::MatrixXd axis(4, 2);
  axis << 1, 7, 2, 7, 3, 7, 5, 7;
  const auto ax = flux::first_principal_component(axis);
  c.expect(ax.direction(0) == 1.0 && ax.direction(1) == 0.0, "axis-aligned direction");

  Eigen::MatrixXd line(3, 2);
  line << 1, 1, 2, 2, 3, 3;
  const auto col = flux::first_principal_component(line);
  // Correctly rounded 1/sqrt(2).
  const double diag = std::sqrt(0.5);
  c.expect(col.direction(0) == diag && col.direction(1) == diag,
           "collinear direction (" + fmt(col.direction(0)) + ", " + fmt(col.direction(1)) + ")");
  c.expect(std::abs(col.eigenvalue - 2.0) <= 1e-9, "collinear eigenvalue " + fmt(col.eigenvalue));

  // Projection keeps the order of collinear points.
  std::vector<DecisionRecord> ds;
  const double xs[] = {3, 1, 2, 5, 4};
  for (int i = 0; i < 5; ++i) {
    ds.push_back(testing::decision("d" + std::to_string(i), LccOutcome{},
                                   {{"x", xs[i]}, {"y", 2 * xs[i] + 1}}));
  }
  const auto pts = flux::project_decisions_1d(ds, {});
  std::vector<std::string> order;
  for (const auto& p : pts) order.push_back(p.decision);
  c.expect(order == std::vector<std::string>{"d1", "d2", "d0", "d4", "d3"}, "collinear projection order");
}

void gap_totality(Check& c) {
  const std::vector<GapId> universe{"g1", "g2", "g3", "g4"};
  auto subset = [&](unsigned mask) {
    std::set<GapId> s;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) s.insert(universe[i]);
    }
    return s;
  };
  int cases = 0;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned p = 0; p < 16; ++p) {
      const auto actual = subset(a), perceived = subset(p);
      const auto s = scenario::classify_gap_scenario({"d", actual, perceived, {}, {}});
      const bool sub = std::includes(actual.begin(), actual.end(), perceived.begin(), perceived.end());
      const bool sup = std::includes(perceived.begin(), perceived.end(), actual.begin(), actual.end());
      scenario::GapKind want = scenario::GapKind::Mixed;
      if (actual == perceived) {
        want = scenario::GapKind::Efficient;
      } else if (sub) {
        want = scenario::GapKind::IllusoryProgress;
      } else if (sup) {
        want = scenario::GapKind::ExcessWaste;
      }
      c.expect(s.kind == want, "pair " + std::to_string(a) + "/" + std::to_string(p));
      ++cases;
    }
  }
  c.expect(cases == 256, "covered " + std::to_string(cases) + " pairs");
}

void perception(Check& c) {
  const UVScenario uv[] = {UVScenario::UV1, UVScenario::UV2, UVScenario::UV3};
  for (auto p : uv) {
    for (auto a : uv) {
      const auto cell = scenario::perception_reality_cell(p, a);
      const std::string id = std::string(to_string(p)) + "/" + std::string(to_string(a));
      c.expect(cell == scenario::perception_reality_cell(p, a), id + " deterministic");
      if (p == a) {
        c.expect(cell.alignment == scenario::Alignment::Aligned && cell.waste_kind == scenario::WasteKind::None,
                 id + " aligned");
        continue;
      }
      const auto swapped = scenario::perception_reality_cell(a, p);
      const bool flipped = (cell.waste_kind == scenario::WasteKind::Illusory &&
                            swapped.waste_kind == scenario::WasteKind::Excess) ||
                           (cell.waste_kind == scenario::WasteKind::Excess &&
                            swapped.waste_kind == scenario::WasteKind::Illusory);
      c.expect(flipped && swapped.alignment == cell.alignment, id + " antisymmetry");
    }
  }
}

void end_to_end(Check& c) {
  auto run = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run_command(args, o, e);
    out = o.str();
    return code;
  };
  const std::vector<std::string> args{"report", "--data", testing::fixture("four-areas").string(), "--format", "json"};
  std::string first, second;
  c.expect(run(args, first) == cli::kOk, "report exit code");
  c.expect(run(args, second) == cli::kOk, "report exit code (second run)");
  try {
    auto a = nlohmann::json::parse(first);
    auto b = nlohmann::json::parse(second);
    for (const auto& problem : render::check_report_schema(a)) c.expect(false, "schema: " + problem);
    // Drop the timestamp and compare the remaining bytes.
    a.erase("generated_at");
    b.erase("generated_at");
    c.expect(a.dump(2) == b.dump(2), "report differs between runs");
  } catch (const nlohmann::json::exception& e) {
    c.expect(false, std::string("report is not JSON: ") + e.what());
  }

  std::ifstream manifest(testing::fixture("invalid.txt"));
  int checked = 0;
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    const auto name = line.substr(0, comma);
    const auto rule = line.substr(comma + 1);
    std::string out;
    const int code = run({"validate", "--data", testing::fixture(name).string(), "--format", "json"}, out);
    c.expect(code == cli::kViolations, name + " exit " + std::to_string(code));
    bool named = false;
    try {
      const auto doc = nlohmann::json::parse(out);
      for (const auto& v : doc.at("violations")) named = named || v.at("rule") == rule;
    } catch (const nlohmann::json::exception&) {
    }
    c.expect(named, name + " missing violation '" + rule + "'");
    ++checked;
  }
  c.expect(checked > 0, "no invalid fixtures listed");
}

void favorable_threshold(Check& c) {
  auto area_with = [](int good, int total) {
    std::vector<DecisionRecord> ds;
    for (int i = 0; i < total; ++i) {
      const auto cons = i < good ? Consequence::LC1 : Consequence::LC4;
      ds.push_back(testing::decision("d" + std::to_string(i), LccOutcome{cons, Duration::Medium}));
    }
    return ds;
  };
  const KnowledgeArea area{"a", "A"};
  const FlowGraph g;
  const auto io = flux::flux_assessment(area, g, area_with(18, 25));
  const auto mold = flux::flux_assessment(area, g, area_with(11, 50));
  c.expect(io.favorable_rate && std::abs(*io.favorable_rate - 0.72) < 1e-12, "rate 0.72 setup");
  c.expect(mold.favorable_rate && std::abs(*mold.favorable_rate - 0.22) < 1e-12, "rate 0.22 setup");
  c.expect(io.verdict == flux::Verdict::Optimal, "0.72 -> " + std::string(flux::to_string(io.verdict)));
  c.expect(mold.verdict == flux::Verdict::EnhanceFlux, "0.22 -> " + std::string(flux::to_string(mold.verdict)));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"flux arithmetic", flux_arithmetic},
      {"CVSS worked example and bands", cvss_example},
      {"health column reproduction", health_rows},
      {"graph metrics match brute-force oracles", graph_oracles},
      {"principal component correctness", pca},
      {"gap classification totality", gap_totality},
      {"perception-reality matrix", perception},
      {"end-to-end determinism and validation", end_to_end},
      {"favorable-rate threshold", favorable_threshold},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    if (!ok) {
      std::cout << " (" << c.failures.size() << " problem(s); first: " << c.failures.front() << ")";
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
