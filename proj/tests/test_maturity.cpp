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
#include <random>

#include <doctest.h>

#include "kvstream/dataset_io.hpp"
#include "kvstream/error.hpp"
#include "kvstream/maturity.hpp"
#include "support.hpp"

using namespace kvstream;
using namespace kvstream::maturity;

namespace {

double score(std::initializer_list<Rating> r) {
  const std::vector<Rating> v(r);
  return dimension_score(v);
}

const WasteFlag& flag(const std::vector<WasteFlag>& flags, std::string_view name) {
  return *std::find_if(flags.begin(), flags.end(), [&](const auto& f) { return f.waste_point == name; });
}

std::vector<MaturityResult> history_of(const Dataset& d) {
  std::vector<MaturityResult> h;
  for (const auto& s : d.scorecards) h.push_back(cvss_assessment(s));
  return h;
}

int phase_of(const Dataset& d) { return phase_status(d, history_of(d)).current_phase; }

// One area "a" with the given ties; persons unless the id starts with "r".
Dataset area_dataset(std::initializer_list<std::pair<const char*, const char*>> ties) {
  Dataset d;
  d.areas.push_back({"a", "A"});
  std::set<std::string> ids;
  for (const auto& [s, t] : ties) {
    ids.insert(s);
    ids.insert(t);
    d.ties.push_back({"a", s, t, 1});
  }
  for (const auto& id : ids) {
    d.actors.push_back({id, id, id[0] == 'r' ? ActorKind::Repository : ActorKind::Person});
  }
  return d;
}

}  // namespace

TEST_CASE("dimension score examples") {
  using enum Rating;
  CHECK(score({SD, D, A, SA}) == 50.0);
  CHECK(score({SA, SA, SA, SA}) == 100.0);
  CHECK(score({A, A, A, A, A, A, A, A}) == 75.0);
  CHECK_THROWS_AS(score({}), Error);
}

TEST_CASE("dimension score normalization and order") {
  for (int n = 1; n <= 40; ++n) {
    CHECK(dimension_score(std::vector<Rating>(static_cast<std::size_t>(n), Rating::SD)) == 0.0);
    CHECK(dimension_score(std::vector<Rating>(static_cast<std::size_t>(n), Rating::SA)) == 100.0);
  }
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 12);
  for (int t = 0; t < 500; ++t) {
    std::vector<Rating> v(static_cast<std::size_t>(len(rng)));
    for (auto& r : v) r = static_cast<Rating>(pick(rng));
    const double base = dimension_score(v);
    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(dimension_score(shuffled) == base);

    // Rating enum runs SA..SD, so a smaller ordinal is a higher rating.
    auto& r = v[static_cast<std::size_t>(t) % v.size()];
    if (r == Rating::SA) continue;
    r = static_cast<Rating>(static_cast<int>(r) - 1);
    CHECK(dimension_score(v) > base);
  }
}

TEST_CASE("band boundaries") {
  CHECK(band_of(0) == Band::Weak);
  CHECK(band_of(24.9) == Band::Weak);
  CHECK(band_of(25) == Band::Marginal);
  CHECK(band_of(50) == Band::Marginal);
  CHECK(band_of(50.5) == Band::Effective);
  CHECK(band_of(80) == Band::Effective);
  CHECK(band_of(80.1) == Band::Robust);
  CHECK(band_of(100) == Band::Robust);
  CHECK_THROWS_AS(band_of(-0.1), Error);
  CHECK_THROWS_AS(band_of(100.5), Error);
  Band last = Band::Weak;
  for (int i = 0; i <= 10000; ++i) {
    const Band b = band_of(i / 100.0);
    CHECK(b >= last);
    last = b;
  }
}

TEST_CASE("cvss assessment examples") {
  using enum Rating;
  const Scorecard table{"t", "2026-01-01T00:00:00Z",
                        {{Dimension::Create, "s1", SD}, {Dimension::Create, "s2", D},
                         {Dimension::Create, "s3", A}, {Dimension::Create, "s4", SA}}};
  const auto r = cvss_assessment(table);
  CHECK(r.dimensions.at(Dimension::Create).score == 50.0);
  CHECK(r.dimensions.at(Dimension::Create).band == Band::Marginal);

  const Scorecard store{"t", "2026-01-01T00:00:00Z", {{Dimension::Store, "s", SA}, {Dimension::Store, "t", SA}}};
  const auto s = cvss_assessment(store);
  CHECK(s.dimensions.size() == 1);
  CHECK(s.dimensions.at(Dimension::Store).band == Band::Robust);
  CHECK_FALSE(s.dimensions.contains(Dimension::Create));
  CHECK(s.overall == 100.0);

  try {
    cvss_assessment(Scorecard{"t", "2026-01-01T00:00:00Z", {}});
    FAIL("expected EmptyDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDimension);
  }
}

TEST_CASE("fixture scorecard") {
  const auto d = load_dataset(testing::fixture("four-areas"));
  const auto r = cvss_assessment(d.scorecards[0]);
  CHECK(r.dimensions.at(Dimension::Create).score == 50.0);
  CHECK(r.dimensions.at(Dimension::Create).band == Band::Marginal);
}

TEST_CASE("phase examples") {
  const auto clean = load_dataset(testing::fixture("clean"));
  CHECK(phase_of(clean) == 5);

  auto no_cards = clean;
  no_cards.scorecards.clear();
  CHECK(phase_of(no_cards) == 2);

  auto poor_flux = clean;
  for (auto& x : poor_flux.decisions) x.lcc = LccOutcome{Consequence::LC4, Duration::Long};
  CHECK(phase_of(poor_flux) == 4);

  auto weak = clean;
  for (auto& item : weak.scorecards[0].items) item.rating = Rating::D;
  CHECK(phase_of(weak) == 3);

  CHECK(phase_of(Dataset{}) == 1);

  const auto st = phase_status(clean, history_of(clean));
  CHECK(st.rules.size() == 6);
  CHECK(std::all_of(st.rules.begin(), st.rules.end(), [](const auto& r) { return r.satisfied; }));
}

TEST_CASE("phase is monotone in evidence") {
  const auto clean = load_dataset(testing::fixture("clean"));
  // Each bit withholds one piece of evidence from the clean dataset.
  auto build = [&](unsigned missing) {
    auto d = clean;
    if (missing & 1u) d.scorecards.clear();
    if (missing & 2u) {
      if (!d.scorecards.empty()) {
        for (auto& item : d.scorecards[0].items) item.rating = Rating::SD;
      }
    }
    if (missing & 4u) {
      for (auto& x : d.decisions) x.lcc = LccOutcome{Consequence::LC3, Duration::Long};
    }
    if (missing & 8u) {
      for (auto& g : d.gaps) g.perceived.clear();
    }
    if (missing & 16u) d.ties.clear();
    return d;
  };
  for (unsigned m = 0; m < 32; ++m) {
    const int phase = phase_of(build(m));
    for (unsigned bit = 1; bit < 32; bit <<= 1) {
      if (!(m & bit)) continue;
      CAPTURE(m);
      CAPTURE(bit);
      CHECK(phase_of(build(m & ~bit)) >= phase);
    }
  }
}

TEST_CASE("waste examples") {
  SUBCASE("clean dataset raises nothing") {
    const auto flags = waste_diagnostics(load_dataset(testing::fixture("clean")));
    REQUIRE(flags.size() == 5);
    for (const auto& f : flags) {
      CAPTURE(f.waste_point);
      CHECK_FALSE(f.triggered);
    }
  }
  SUBCASE("tacit heavy area with a cut point") {
    // 6 of 7 ties are person-to-person (85.7%); p4 only reaches p1.
    const auto d = area_dataset({{"p1", "p2"}, {"p2", "p1"}, {"p2", "p3"}, {"p3", "p2"}, {"p3", "p1"},
                                 {"p4", "p1"}, {"p1", "rdoc"}});
    const auto flags = waste_diagnostics(d);
    CHECK(flag(flags, "Creation").triggered);
    CHECK(flag(flags, "Creation").areas == std::vector<AreaId>{"a"});
  }
  SUBCASE("low reciprocity") {
    // One mutual pair among 13 person ties: 15.4%.
    const auto d = area_dataset({{"p1", "p2"}, {"p2", "p1"}, {"p1", "p3"}, {"p1", "p4"}, {"p1", "p5"},
                                 {"p1", "p6"}, {"p2", "p3"}, {"p2", "p4"}, {"p2", "p5"}, {"p2", "p6"},
                                 {"p3", "p4"}, {"p3", "p5"}, {"p3", "p6"}});
    CHECK(flag(waste_diagnostics(d), "Sharing").triggered);
  }
  SUBCASE("unrecorded outcomes, unsurfaced gaps and long cycles") {
    auto d = load_dataset(testing::fixture("clean"));
    d.decisions[0].lcc.reset();
    CHECK(flag(waste_diagnostics(d), "Validation").triggered);
    d.decisions[0].lcc = LccOutcome{Consequence::LC4, Duration::Long};
    d.decisions[1].lcc = LccOutcome{Consequence::LC4, Duration::Long};
    CHECK(flag(waste_diagnostics(d), "Learning Cycle").triggered);
    d.gaps[2].perceived.clear();
    const auto& wishful = flag(waste_diagnostics(d), "Wishful Thinking");
    CHECK(wishful.triggered);
    CHECK(wishful.evidence.find("d3") != std::string::npos);
  }
}
