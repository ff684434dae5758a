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

// Standalone SVG 1.1 charts: density-reciprocity quadrant scatter and the
// per-area knowledge flux chart. Fixed 800x600 viewport with 60 px margins.

#ifndef KVSTREAM_SVG_HPP_
#define KVSTREAM_SVG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "kvstream/report.hpp"

namespace kvstream::svg {

inline constexpr double kWidth = 800.0;
inline constexpr double kHeight = 600.0;
inline constexpr double kMargin = 60.0;

// Viewport transforms of the scatter plot.
inline double density_to_x(double density) { return kMargin + density * (kWidth - 2 * kMargin); }
inline double reciprocity_to_y(double pct) {
  return kHeight - kMargin - pct / 100.0 * (kHeight - 2 * kMargin);
}

// One <circle class="point"> per row with defined density and reciprocity.
std::string density_reciprocity_svg(const std::vector<report::FlowFluxRow>& rows,
                                    const flow::Thresholds& t = {});

// One <rect class="bar"> per area; EnhanceFlux areas get an upward
// <line class="arrow"> toward the optimal direction.
std::string flux_svg(const std::vector<flux::FluxAssessment>& items);

// Writes density_reciprocity.svg and knowledge_flux.svg into out_dir.
// Throws Error(IoError).
std::vector<std::filesystem::path> emit_svg_plots(const report::ReportBundle& b,
                                                  const std::filesystem::path& out_dir,
                                                  const flow::Thresholds& t = {});

}  // namespace kvstream::svg

#endif  // KVSTREAM_SVG_HPP_
