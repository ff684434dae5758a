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

// Text, JSON and CSV renderings of a ReportBundle.

#ifndef KVSTREAM_RENDER_HPP_
#define KVSTREAM_RENDER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kvstream/report.hpp"

namespace kvstream::render {

inline constexpr std::string_view kSchemaVersion = "kvstream_report_v1";

enum class Format { Text, Json, Csv };

// Throws Error(UnsupportedFormat).
Format parse_format(std::string_view s);

enum class Section { All, FlowFlux, Flow, Flux, Lcc, Gaps, Cvss, Phase, Waste };

struct RenderedFile {
  std::string name;
  std::string content;
};

// Text and JSON yield one file; CSV yields one file per report section,
// each starting with its header row.
std::vector<RenderedFile> render_report(const report::ReportBundle& b, Format f,
                                        Section s = Section::All);

// JSON object keyed by section name, with the schema tag and timestamp.
// Object keys are emitted in sorted order.
nlohmann::json to_json(const report::ReportBundle& b, Section s = Section::All);

// Structural check against kvstream_report_v1; returns one message per
// problem, empty when the document conforms. With `complete` every section
// must be present.
std::vector<std::string> check_report_schema(const nlohmann::json& doc, bool complete = true);

// The flow-flux table with the familiar column headers.
std::string flow_flux_table(const std::vector<report::FlowFluxRow>& rows);

}  // namespace kvstream::render

#endif  // KVSTREAM_RENDER_HPP_
