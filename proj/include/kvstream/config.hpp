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

// Every tunable threshold of the toolkit, overridable from a JSON file that
// maps threshold names to numbers, e.g. {"density_hi": 0.6}.

#ifndef KVSTREAM_CONFIG_HPP_
#define KVSTREAM_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "kvstream/flow_metrics.hpp"
#include "kvstream/learning_flux.hpp"
#include "kvstream/maturity.hpp"

namespace kvstream {

struct HealthThresholds {
  double red_density_below = 0.35;
  double red_reciprocity_below = 20.0;
  double red_tacit_above = 50.0;
  double green_density_min = 0.6;
  double green_reciprocity_min = 50.0;
};

struct ObservationThresholds {
  double low_reciprocity_below = 20.0;
  double high_tacit_above = 70.0;
  double high_explicit_above = 70.0;
};

struct Config {
  flow::Thresholds flow;
  double top_k = 3;
  flux::FluxConfig flux;
  flux::LccWeights lcc;
  HealthThresholds health;
  ObservationThresholds observations;
  maturity::BandConfig bands;
  maturity::PhaseRules phase;
  maturity::WasteRules waste;

  // Names accepted by set() and by config files, sorted.
  static std::vector<std::string> names();

  // Throws Error(ParseError) for an unknown name or an out-of-range value.
  void set(const std::string& name, double value);
  double get(const std::string& name) const;

  maturity::PhaseInputs phase_inputs() const { return {phase, flux}; }
  maturity::WasteInputs waste_inputs() const { return {waste, lcc}; }
};

// Defaults overlaid with the overrides in `path`.
// Throws Error(MissingFile) or Error(ParseError).
Config load_config(const std::filesystem::path& path);

}  // namespace kvstream

#endif  // KVSTREAM_CONFIG_HPP_
