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

#include "kvstream/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kvstream/error.hpp"

namespace kvstream {

namespace {

using Slot = std::function<double&(Config&)>;

const std::map<std::string, Slot>& slots() {
  static const std::map<std::string, Slot> table = {
      {"density_hi", [](Config& c) -> double& { return c.flow.density_hi; }},
      {"reciprocity_hi", [](Config& c) -> double& { return c.flow.reciprocity_hi; }},
      {"top_k", [](Config& c) -> double& { return c.top_k; }},
      {"favorable_threshold", [](Config& c) -> double& { return c.flux.favorable_threshold; }},
      {"lcc_c_lc1", [](Config& c) -> double& { return c.lcc.consequence[0]; }},
      {"lcc_c_lc2", [](Config& c) -> double& { return c.lcc.consequence[1]; }},
      {"lcc_c_lc3", [](Config& c) -> double& { return c.lcc.consequence[2]; }},
      {"lcc_c_lc4", [](Config& c) -> double& { return c.lcc.consequence[3]; }},
      {"lcc_d_short", [](Config& c) -> double& { return c.lcc.duration[0]; }},
      {"lcc_d_medium", [](Config& c) -> double& { return c.lcc.duration[1]; }},
      {"lcc_d_long", [](Config& c) -> double& { return c.lcc.duration[2]; }},
      {"health_red_density_below", [](Config& c) -> double& { return c.health.red_density_below; }},
      {"health_red_reciprocity_below", [](Config& c) -> double& { return c.health.red_reciprocity_below; }},
      {"health_red_tacit_above", [](Config& c) -> double& { return c.health.red_tacit_above; }},
      {"health_green_density_min", [](Config& c) -> double& { return c.health.green_density_min; }},
      {"health_green_reciprocity_min", [](Config& c) -> double& { return c.health.green_reciprocity_min; }},
      {"obs_low_reciprocity_below", [](Config& c) -> double& { return c.observations.low_reciprocity_below; }},
      {"obs_high_tacit_above", [](Config& c) -> double& { return c.observations.high_tacit_above; }},
      {"obs_high_explicit_above", [](Config& c) -> double& { return c.observations.high_explicit_above; }},
      {"band_weak_below", [](Config& c) -> double& { return c.bands.weak_below; }},
      {"band_marginal_max", [](Config& c) -> double& { return c.bands.marginal_max; }},
      {"band_effective_max", [](Config& c) -> double& { return c.bands.effective_max; }},
      {"phase_optimal_area_fraction", [](Config& c) -> double& { return c.phase.optimal_area_fraction; }},
      {"phase_efficient_gap_fraction", [](Config& c) -> double& { return c.phase.efficient_gap_fraction; }},
      {"waste_creation_tacit_pct", [](Config& c) -> double& { return c.waste.creation_tacit_pct; }},
      {"waste_creation_min_cut_points", [](Config& c) -> double& { return c.waste.creation_min_cut_points; }},
      {"waste_validation_unrecorded_fraction", [](Config& c) -> double& { return c.waste.validation_unrecorded_fraction; }},
      {"waste_sharing_reciprocity_pct", [](Config& c) -> double& { return c.waste.sharing_reciprocity_pct; }},
      {"waste_learning_cycle_uncertainty", [](Config& c) -> double& { return c.waste.learning_cycle_uncertainty; }},
  };
  return table;
}

// phase_min_band is an ordinal (0 Weak .. 3 Robust) rather than a slot.
constexpr const char* kMinBand = "phase_min_band";

}  // namespace

std::vector<std::string> Config::names() {
  std::vector<std::string> out;
  for (const auto& [name, slot] : slots()) out.push_back(name);
  out.push_back(kMinBand);
  std::sort(out.begin(), out.end());
  return out;
}

void Config::set(const std::string& name, double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "config value for '" + name + "' is not finite");
  }
  if (name == kMinBand) {
    if (value < 0 || value > 3 || value != std::floor(value)) {
      throw Error(ErrorCode::ParseError, "phase_min_band must be an integer in 0..3");
    }
    phase.min_band = static_cast<maturity::Band>(static_cast<int>(value));
    return;
  }
  auto it = slots().find(name);
  if (it == slots().end()) throw Error(ErrorCode::ParseError, "unknown config key '" + name + "'");
  if (name == "top_k" && (value < 1 || value != std::floor(value))) {
    throw Error(ErrorCode::ParseError, "top_k must be a positive integer");
  }
  it->second(*this) = value;
}

double Config::get(const std::string& name) const {
  if (name == kMinBand) return static_cast<double>(phase.min_band);
  auto it = slots().find(name);
  if (it == slots().end()) throw Error(ErrorCode::ParseError, "unknown config key '" + name + "'");
  return it->second(const_cast<Config&>(*this));
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "config file " + path.string() + " not found");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.filename().string() + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  Config cfg;
  for (const auto& [name, value] : doc.items()) {
    if (!value.is_number()) {
      throw Error(ErrorCode::ParseError, "config value for '" + name + "' must be a number");
    }
    cfg.set(name, value.get<double>());
  }
  return cfg;
}

}  // namespace kvstream
