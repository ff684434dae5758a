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

#include <algorithm>
#include <fstream>
#include <random>

#include <doctest.h>

#include "kvstream/dataset_io.hpp"
#include "kvstream/error.hpp"
#include "kvstream/model.hpp"
#include "support.hpp"

using namespace kvstream;
using kvstream::testing::fixture;
using kvstream::testing::TempDir;

namespace {

bool has_rule(const std::vector<Violation>& v, std::string_view rule) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

ErrorCode load_error(const std::filesystem::path& dir) {
  try {
    parse_dataset(dir);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

std::vector<Violation> load_violations(const std::filesystem::path& dir) {
  try {
    load_dataset(dir);
  } catch (const ValidationError& e) {
    return e.violations();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal fixture counts") {
  const auto d = load_dataset(fixture("minimal"));
  CHECK(d.actors.size() == 4);
  CHECK(d.ties.size() == 3);
  REQUIRE(d.areas.size() == 1);
  CHECK(d.areas[0].name == ".NET/WPF/WCF");
  CHECK(d.find_actor("wiki")->kind == ActorKind::Repository);
  CHECK(d.ties[2].weight == 5);
  CHECK(d.decisions.empty());
  CHECK(d.gaps.empty());
  CHECK(d.scorecards.empty());
  CHECK_FALSE(d.uncertainty.has_value());
}

TEST_CASE("missing required file") {
  CHECK(load_error(fixture("missing-actors")) == ErrorCode::MissingFile);
  CHECK(load_error(fixture("does-not-exist")) == ErrorCode::MissingFile);
}

TEST_CASE("zero weight is a parse error naming the file and line") {
  try {
    parse_dataset(fixture("bad-weight"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("ties.csv:5") != std::string::npos);
  }
}

TEST_CASE("malformed records") {
  TempDir tmp;
  save_dataset(load_dataset(fixture("clean")), tmp.path());

  SUBCASE("unknown actor kind") {
    std::ofstream(tmp.path() / "actors.csv") << "id,name,kind\nalice,Alice,robot\n";
    CHECK(load_error(tmp.path()) == ErrorCode::ParseError);
  }
  SUBCASE("bad json") {
    std::ofstream(tmp.path() / "decisions.json") << "[{\"id\": ";
    CHECK(load_error(tmp.path()) == ErrorCode::ParseError);
  }
  SUBCASE("bad rating") {
    std::ofstream(tmp.path() / "scorecards.json")
        << R"([{"team":"t","timestamp":"2026-01-01T00:00:00Z","items":[{"dimension":"Create","statement":"s","rating":"X"}]}])";
    CHECK(load_error(tmp.path()) == ErrorCode::ParseError);
  }
  SUBCASE("bad timestamp") {
    std::ofstream(tmp.path() / "scorecards.json")
        << R"([{"team":"t","timestamp":"yesterday","items":[{"dimension":"Create","statement":"s","rating":"A"}]}])";
    CHECK(load_error(tmp.path()) == ErrorCode::ParseError);
  }
  SUBCASE("weight defaults to one") {
    std::ofstream(tmp.path() / "ties.csv") << "area,source,target\nnet,alice,bob\n";
    const auto d = parse_dataset(tmp.path());
    REQUIRE(d.ties.size() == 1);
    CHECK(d.ties[0].weight == 1);
  }
}

TEST_CASE("validation examples") {
  CHECK(validate_dataset(load_dataset(fixture("clean"))).empty());
  CHECK(validate_dataset(load_dataset(fixture("minimal"))).empty());
  CHECK(has_rule(load_violations(fixture("repo-source")), rules::kRepositoryOrigin));
  CHECK(has_rule(load_violations(fixture("dup-actor")), rules::kIdUnique));
  CHECK(has_rule(load_violations(fixture("dup-tie")), rules::kTieUnique));
  CHECK(has_rule(load_violations(fixture("dangling-gap")), rules::kDecisionResolves));
  CHECK(has_rule(load_violations(fixture("poset-cycle")), rules::kOrderAcyclic));
}

TEST_CASE("each invariant is reported") {
  auto d = load_dataset(fixture("clean"));

  SUBCASE("self tie") {
    d.ties.push_back({"net", "alice", "alice", 1});
    CHECK(has_rule(validate_dataset(d), rules::kNoSelfTie));
  }
  SUBCASE("weight") {
    d.ties[0].weight = 0;
    CHECK(has_rule(validate_dataset(d), rules::kWeightPositive));
  }
  SUBCASE("dangling tie endpoint") {
    d.ties.push_back({"net", "alice", "zed", 1});
    CHECK(has_rule(validate_dataset(d), rules::kActorResolves));
  }
  SUBCASE("unknown tie area") {
    d.ties.push_back({"mars", "alice", "wiki", 1});
    CHECK(has_rule(validate_dataset(d), rules::kAreaResolves));
  }
  SUBCASE("decision references") {
    d.decisions[0].actors.insert("zed");
    d.decisions[1].area = "mars";
    d.decisions[2].product = "";
    d.decisions[2].attributes[""] = 1.0;
    d.decisions[0].uncertainty = "Extreme";
    const auto v = validate_dataset(d);
    CHECK(has_rule(v, rules::kActorResolves));
    CHECK(has_rule(v, rules::kAreaResolves));
    CHECK(has_rule(v, rules::kProductResolves));
    CHECK(has_rule(v, rules::kAttributeName));
    CHECK(has_rule(v, rules::kLevelResolves));
  }
  SUBCASE("gap ids") {
    d.gaps[0].actual.insert("");
    CHECK(has_rule(validate_dataset(d), rules::kGapIdNonEmpty));
  }
  SUBCASE("order endpoint") {
    d.uncertainty->order.push_back({"Low", "Nowhere"});
    CHECK(has_rule(validate_dataset(d), rules::kOrderEndpoint));
  }
  SUBCASE("empty scorecard") {
    d.scorecards[0].items.clear();
    CHECK(has_rule(validate_dataset(d), rules::kScorecardItems));
  }
  SUBCASE("duplicate decision and area") {
    d.decisions.push_back(d.decisions[0]);
    d.areas.push_back(d.areas[0]);
    const auto v = validate_dataset(d);
    CHECK(std::count_if(v.begin(), v.end(), [](const auto& x) { return x.rule == rules::kIdUnique; }) == 2);
  }
}

TEST_CASE("load_dataset rejects invalid directories") {
  CHECK_THROWS_AS(load_dataset(fixture("dup-actor")), ValidationError);
  try {
    load_dataset(fixture("dup-actor"));
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::ValidationFailed);
  }
}

TEST_CASE("round trip through save") {
  for (const char* name : {"minimal", "clean", "four-areas"}) {
    CAPTURE(name);
    const auto d = load_dataset(fixture(name));
    TempDir tmp;
    save_dataset(d, tmp.path());
    CHECK(load_dataset(tmp.path()) == d);
  }
}

TEST_CASE("round trip keeps awkward strings") {
  auto d = load_dataset(fixture("clean"));
  d.actors[0].name = "Smith, \"Al\"";
  d.areas[0].name = "C++, templates";
  TempDir tmp;
  save_dataset(d, tmp.path());
  CHECK(load_dataset(tmp.path()) == d);
}

TEST_CASE("validation is order independent") {
  auto d = parse_dataset(fixture("four-areas"));
  // Seed a mix of violations first.
  d.actors.push_back(d.actors[3]);
  d.ties.push_back(d.ties[7]);
  d.ties.push_back({"fpga", "fpdoc1", "fp1", 1});
  d.gaps.push_back({"ghost", {"g1"}, {}, {}, {}});
  const auto expected = validate_dataset(d);
  REQUIRE(expected.size() >= 4);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(d.actors.begin(), d.actors.end(), rng);
    std::shuffle(d.ties.begin(), d.ties.end(), rng);
    std::shuffle(d.decisions.begin(), d.decisions.end(), rng);
    std::shuffle(d.gaps.begin(), d.gaps.end(), rng);
    CHECK(validate_dataset(d) == expected);
  }
}

TEST_CASE("flow graph views") {
  const auto d = load_dataset(fixture("minimal"));
  const auto g = d.flow_graph("net");
  CHECK(g.actors().size() == 4);
  CHECK(g.persons() == std::vector<ActorId>{"alice", "bob", "carol"});
  CHECK(g.person_ties().size() == 2);
  CHECK(g.has_tie("carol", "wiki"));
  CHECK_FALSE(g.has_tie("wiki", "carol"));
  const auto u = g.undirected_projection();
  CHECK(u.at("wiki").contains("carol"));
  const auto m = g.mutual_person_projection();
  CHECK(m.at("alice") == std::set<ActorId>{"bob"});
  CHECK(m.at("carol").empty());
}

TEST_CASE("decisions without outcomes stay undefined") {
  const auto d = load_dataset(fixture("four-areas"));
  std::size_t missing = 0;
  for (const auto& x : d.decisions) missing += x.lcc ? 0 : 1;
  CHECK(missing == 11);
}

TEST_CASE("enum parsing") {
  CHECK(parse_consequence("LC-3") == Consequence::LC3);
  CHECK(parse_consequence("LC4") == Consequence::LC4);
  CHECK(parse_uv("UV-2") == UVScenario::UV2);
  CHECK(parse_dimension("create") == Dimension::Create);
  CHECK(parse_rating("SD") == Rating::SD);
  CHECK(parse_duration("long") == Duration::Long);
  CHECK_THROWS_AS(parse_duration("eternal"), Error);
  CHECK(to_string(Dimension::Share) == "Share");
}

TEST_CASE("csv helpers") {
  CHECK(split_csv_line("a,\"b,c\",\"d\"\"e\"") == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(csv_escape("x,y") == "\"x,y\"");
  CHECK(csv_escape("plain") == "plain");
}
