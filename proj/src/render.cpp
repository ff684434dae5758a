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

#include "kvstream/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kvstream/dataset_io.hpp"
#include "kvstream/error.hpp"

namespace kvstream::render {

using nlohmann::json;
using report::ReportBundle;

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string num(double v) { return json(v).dump(); }
std::string num(const std::optional<double>& v) { return v ? num(*v) : ""; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::vector<std::string> escaped;
  for (const auto& f : fields) escaped.push_back(csv_escape(f));
  return join(escaped, ",") + "\n";
}

std::string clique_text(const std::vector<std::vector<ActorId>>& cliques) {
  std::vector<std::string> parts;
  for (const auto& c : cliques) parts.push_back("{" + join(c, " ") + "}");
  return join(parts, " ");
}

bool wants(Section have, Section want) { return have == Section::All || have == want; }

// ---- JSON -----------------------------------------------------------------

json flow_flux_json(const std::vector<report::FlowFluxRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"area", r.area},
                   {"area_name", r.area_name},
                   {"density", opt(r.density)},
                   {"reciprocity", opt(r.reciprocity)},
                   {"tacit_pct", r.split ? json(r.split->tacit_pct) : json(nullptr)},
                   {"explicit_pct", r.split ? json(r.split->explicit_pct) : json(nullptr)},
                   {"flux", opt(r.flux)},
                   {"observations", r.observations},
                   {"health", r.health ? json(report::to_string(*r.health)) : json(nullptr)},
                   {"insufficient_data", r.insufficient_data},
                   {"note", r.note}});
  }
  return out;
}

json flow_json(const std::vector<flow::FlowSummary>& summaries) {
  json out = json::array();
  for (const auto& s : summaries) {
    json ranks = json::array();
    for (const auto& r : s.most_approached) {
      ranks.push_back({{"actor", r.actor},
                       {"in_degree", r.in_degree},
                       {"weighted_in_degree", r.weighted_in_degree}});
    }
    out.push_back({{"area", s.area},
                   {"density", opt(s.density)},
                   {"reciprocity", opt(s.reciprocity)},
                   {"tacit_pct", s.split ? json(s.split->tacit_pct) : json(nullptr)},
                   {"explicit_pct", s.split ? json(s.split->explicit_pct) : json(nullptr)},
                   {"cut_points", s.cut_points},
                   {"cliques", s.cliques},
                   {"most_approached", ranks},
                   {"quadrant", flow::to_string(s.quadrant)}});
  }
  return out;
}

json flux_json(const std::vector<flux::FluxAssessment>& items) {
  json out = json::array();
  for (const auto& a : items) {
    out.push_back({{"area", a.area},
                   {"tie_count", a.tie_count},
                   {"decision_count", a.decision_count},
                   {"flux", a.flux},
                   {"favorable_rate", opt(a.favorable_rate)},
                   {"verdict", flux::to_string(a.verdict)},
                   {"recommendation", a.recommendation}});
  }
  return out;
}

json lcc_json(const std::vector<report::AreaLcc>& items) {
  json out = json::array();
  for (const auto& l : items) {
    json counts = json::array();
    for (const auto& [cell, n] : l.distribution.counts) {
      counts.push_back({{"consequence", to_string(cell.first)},
                        {"duration", to_string(cell.second)},
                        {"count", n}});
    }
    json points = json::array();
    for (const auto& p : l.projection) {
      points.push_back({{"decision", p.decision},
                        {"coordinate", p.coordinate},
                        {"consequence", to_string(p.consequence)}});
    }
    out.push_back({{"area", l.distribution.area},
                   {"counts", counts},
                   {"recorded_total", l.distribution.recorded_total},
                   {"unrecorded_total", l.distribution.unrecorded_total},
                   {"uncertainty", opt(l.uncertainty)},
                   {"favorable_rate", opt(l.favorable_rate)},
                   {"projection", points},
                   {"dropped_columns", l.dropped_columns},
                   {"projection_note", l.projection_note}});
  }
  return out;
}

json gaps_json(const ReportBundle& b) {
  json scenarios = json::array();
  for (const auto& s : b.gap_scenarios) {
    scenarios.push_back({{"decision", s.decision},
                         {"kind", scenario::to_string(s.kind)},
                         {"unknown_unknowns", s.unknown_unknowns},
                         {"phantom_gaps", s.phantom_gaps}});
  }
  json tally = json::object();
  for (const auto& [kind, n] : b.gap_tally) tally[std::string(scenario::to_string(kind))] = n;
  return {{"scenarios", scenarios}, {"tally", tally}};
}

json perception_json(const ReportBundle& b) {
  json matrix = json::array();
  json cells = json::array();
  for (int p = 0; p < 3; ++p) {
    json row = json::array();
    for (int a = 0; a < 3; ++a) {
      row.push_back(b.perception[p][a]);
      const auto cell = scenario::perception_reality_cell(static_cast<UVScenario>(p + 1),
                                                          static_cast<UVScenario>(a + 1));
      cells.push_back({{"perceived", to_string(cell.perceived)},
                       {"actual", to_string(cell.actual)},
                       {"alignment", scenario::to_string(cell.alignment)},
                       {"waste_kind", scenario::to_string(cell.waste_kind)},
                       {"count", b.perception[p][a]}});
    }
    matrix.push_back(row);
  }
  return {{"matrix", matrix}, {"cells", cells}};
}

json maturity_json(const std::vector<maturity::MaturityResult>& results) {
  json out = json::array();
  for (const auto& r : results) {
    json dims = json::object();
    json missing = json::array();
    for (auto dim : kAllDimensions) {
      auto it = r.dimensions.find(dim);
      if (it == r.dimensions.end()) {
        missing.push_back(to_string(dim));
        continue;
      }
      dims[std::string(to_string(dim))] = {{"score", it->second.score},
                                           {"band", maturity::to_string(it->second.band)}};
    }
    out.push_back({{"team", r.team},
                   {"timestamp", r.timestamp},
                   {"dimensions", dims},
                   {"not_assessed", missing},
                   {"overall", r.overall}});
  }
  return out;
}

json phase_json(const maturity::PhaseStatus& st) {
  json rules = json::array();
  for (const auto& r : st.rules) {
    rules.push_back({{"rule_id", r.rule_id},
                     {"exit_of_phase", r.exit_of_phase},
                     {"satisfied", r.satisfied},
                     {"evidence", r.evidence}});
  }
  return {{"current_phase", st.current_phase}, {"rules", rules}};
}

json waste_json(const std::vector<maturity::WasteFlag>& flags) {
  json out = json::array();
  for (const auto& w : flags) {
    out.push_back({{"waste_point", w.waste_point},
                   {"triggered", w.triggered},
                   {"evidence", w.evidence},
                   {"areas", w.areas}});
  }
  return out;
}

// ---- Text -----------------------------------------------------------------

std::string pct(double v) { return fixed(v, 0) + "%"; }

std::string flow_text(const std::vector<flow::FlowSummary>& summaries) {
  std::ostringstream os;
  os << "FLOW MEASURES\n";
  for (const auto& s : summaries) {
    os << s.area << ": density " << (s.density ? fixed(*s.density, 2) : "n/a")
       << ", reciprocity " << (s.reciprocity ? fixed(*s.reciprocity, 1) + "%" : "n/a")
       << ", tacit:explicit "
       << (s.split ? pct(s.split->tacit_pct) + ":" + pct(s.split->explicit_pct) : "n/a")
       << ", quadrant " << flow::to_string(s.quadrant) << "\n";
    os << "  cut points: " << (s.cut_points.empty() ? "none" : join(s.cut_points, ", ")) << "\n";
    os << "  cliques: " << (s.cliques.empty() ? "none" : clique_text(s.cliques)) << "\n";
    std::vector<std::string> ranks;
    for (const auto& r : s.most_approached) {
      ranks.push_back(r.actor + " (" + std::to_string(r.in_degree) + ", weighted " +
                      std::to_string(r.weighted_in_degree) + ")");
    }
    os << "  most approached: " << (ranks.empty() ? "none" : join(ranks, ", ")) << "\n";
  }
  return os.str();
}

std::string flux_text(const std::vector<flux::FluxAssessment>& items) {
  std::ostringstream os;
  os << "KNOWLEDGE FLUX\n";
  for (const auto& a : items) {
    os << a.area << ": " << a.tie_count << " ties / " << a.decision_count
       << " decisions = " << fixed(a.flux, 2) << ", favorable "
       << (a.favorable_rate ? fixed(100.0 * *a.favorable_rate, 0) + "%" : "n/a") << ", "
       << flux::to_string(a.verdict) << "\n  " << a.recommendation << "\n";
  }
  return os.str();
}

std::string lcc_text(const std::vector<report::AreaLcc>& items) {
  std::ostringstream os;
  os << "LEARNING CYCLE CONSEQUENCES\n";
  for (const auto& l : items) {
    os << l.distribution.area << ": " << l.distribution.recorded_total << " recorded, "
       << l.distribution.unrecorded_total << " not yet experienced";
    if (l.uncertainty) os << ", uncertainty " << fixed(*l.uncertainty, 3);
    os << "\n";
    for (const auto& [cell, n] : l.distribution.counts) {
      os << "  " << to_string(cell.first) << "/" << to_string(cell.second) << ": " << n << "\n";
    }
    if (!l.projection.empty()) {
      os << "  projection:";
      for (const auto& p : l.projection) {
        os << " " << p.decision << "=" << fixed(p.coordinate, 3) << "(" << to_string(p.consequence) << ")";
      }
      os << "\n";
    } else if (!l.projection_note.empty()) {
      os << "  projection unavailable: " << l.projection_note << "\n";
    }
  }
  return os.str();
}

std::string gaps_text(const ReportBundle& b) {
  std::ostringstream os;
  os << "KNOWLEDGE GAP SCENARIOS\n";
  for (const auto& [kind, n] : b.gap_tally) os << "  " << scenario::to_string(kind) << ": " << n << "\n";
  for (const auto& s : b.gap_scenarios) {
    os << "  " << s.decision << ": " << scenario::to_string(s.kind) << " (unknown unknowns "
       << s.unknown_unknowns << ", phantom gaps " << s.phantom_gaps << ")\n";
  }
  os << "PERCEPTION-REALITY MATRIX (rows perceived, columns actual)\n";
  os << "        UV1   UV2   UV3\n";
  for (int p = 0; p < 3; ++p) {
    char line[64];
    std::snprintf(line, sizeof line, "  UV%d %5zu %5zu %5zu\n", p + 1, b.perception[p][0],
                  b.perception[p][1], b.perception[p][2]);
    os << line;
  }
  return os.str();
}

std::string cvss_text(const std::vector<maturity::MaturityResult>& results) {
  std::ostringstream os;
  os << "CVSS MATURITY\n";
  for (const auto& r : results) {
    os << r.team << " @ " << r.timestamp << ": overall " << fixed(r.overall, 1) << "%\n";
    for (auto dim : kAllDimensions) {
      auto it = r.dimensions.find(dim);
      os << "  " << to_string(dim) << ": ";
      if (it == r.dimensions.end()) {
        os << "not assessed\n";
      } else {
        os << fixed(it->second.score, 1) << "% " << maturity::to_string(it->second.band) << "\n";
      }
    }
  }
  return os.str();
}

std::string phase_text(const maturity::PhaseStatus& st) {
  std::ostringstream os;
  os << "DEPLOYMENT PHASE " << st.current_phase << "\n";
  for (const auto& r : st.rules) {
    os << "  [" << (r.satisfied ? "x" : " ") << "] phase " << r.exit_of_phase << " exit: "
       << r.rule_id << " - " << r.evidence << "\n";
  }
  return os.str();
}

std::string waste_text(const std::vector<maturity::WasteFlag>& flags) {
  std::ostringstream os;
  os << "WASTE POINTS\n";
  for (const auto& w : flags) {
    os << "  " << (w.triggered ? "TRIGGERED " : "ok        ") << w.waste_point << ": " << w.evidence << "\n";
  }
  return os.str();
}

std::string text_report(const ReportBundle& b, Section s) {
  std::string out;
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += "\n";
    out += part;
  };
  if (s == Section::All) out = "Knowledge value stream report generated " + b.generated_at + "\n";
  if (wants(s, Section::FlowFlux)) add(flow_flux_table(b.rows));
  if (wants(s, Section::Flow)) add(flow_text(b.flow));
  if (wants(s, Section::Flux)) add(flux_text(b.flux));
  if (wants(s, Section::Lcc)) add(lcc_text(b.lcc));
  if (wants(s, Section::Gaps)) add(gaps_text(b));
  if (wants(s, Section::Cvss)) add(cvss_text(b.maturity));
  if (wants(s, Section::Phase)) add(phase_text(b.phase));
  if (wants(s, Section::Waste)) add(waste_text(b.waste));
  return out;
}

// ---- CSV ------------------------------------------------------------------

std::vector<RenderedFile> csv_report(const ReportBundle& b, Section s) {
  std::vector<RenderedFile> files;
  if (wants(s, Section::FlowFlux)) {
    std::string c = csv_row({"area", "area_name", "density", "reciprocity", "tacit_pct",
                             "explicit_pct", "flux", "observations", "health", "insufficient_data"});
    for (const auto& r : b.rows) {
      c += csv_row({r.area, r.area_name, num(r.density), num(r.reciprocity),
                    r.split ? num(r.split->tacit_pct) : "", r.split ? num(r.split->explicit_pct) : "",
                    num(r.flux), join(r.observations, "; "),
                    r.health ? std::string(report::to_string(*r.health)) : "",
                    r.insufficient_data ? "true" : "false"});
    }
    files.push_back({"flow_flux.csv", c});
  }
  if (wants(s, Section::Flow)) {
    std::string c = csv_row({"area", "density", "reciprocity", "tacit_pct", "explicit_pct",
                             "quadrant", "cut_points", "cliques", "most_approached"});
    for (const auto& f : b.flow) {
      std::vector<std::string> ranks;
      for (const auto& r : f.most_approached) ranks.push_back(r.actor + ":" + std::to_string(r.in_degree));
      c += csv_row({f.area, num(f.density), num(f.reciprocity), f.split ? num(f.split->tacit_pct) : "",
                    f.split ? num(f.split->explicit_pct) : "", std::string(flow::to_string(f.quadrant)),
                    join(f.cut_points, " "), clique_text(f.cliques), join(ranks, " ")});
    }
    files.push_back({"flow.csv", c});
  }
  if (wants(s, Section::Flux)) {
    std::string c = csv_row({"area", "tie_count", "decision_count", "flux", "favorable_rate",
                             "verdict", "recommendation"});
    for (const auto& a : b.flux) {
      c += csv_row({a.area, std::to_string(a.tie_count), std::to_string(a.decision_count),
                    num(a.flux), num(a.favorable_rate), std::string(flux::to_string(a.verdict)),
                    a.recommendation});
    }
    files.push_back({"flux.csv", c});
  }
  if (wants(s, Section::Lcc)) {
    std::string summary = csv_row({"area", "recorded_total", "unrecorded_total", "uncertainty",
                                   "favorable_rate", "projection_note"});
    std::string counts = csv_row({"area", "consequence", "duration", "count"});
    std::string proj = csv_row({"area", "decision", "coordinate", "consequence"});
    for (const auto& l : b.lcc) {
      const auto& area = l.distribution.area;
      summary += csv_row({area, std::to_string(l.distribution.recorded_total),
                          std::to_string(l.distribution.unrecorded_total), num(l.uncertainty),
                          num(l.favorable_rate), l.projection_note});
      for (const auto& [cell, n] : l.distribution.counts) {
        counts += csv_row({area, std::string(to_string(cell.first)),
                           std::string(to_string(cell.second)), std::to_string(n)});
      }
      for (const auto& p : l.projection) {
        proj += csv_row({area, p.decision, num(p.coordinate), std::string(to_string(p.consequence))});
      }
    }
    files.push_back({"lcc.csv", summary});
    files.push_back({"lcc_counts.csv", counts});
    files.push_back({"projection.csv", proj});
  }
  if (wants(s, Section::Gaps)) {
    std::string c = csv_row({"decision", "kind", "unknown_unknowns", "phantom_gaps"});
    for (const auto& g : b.gap_scenarios) {
      c += csv_row({g.decision, std::string(scenario::to_string(g.kind)),
                    std::to_string(g.unknown_unknowns), std::to_string(g.phantom_gaps)});
    }
    files.push_back({"gaps.csv", c});
    std::string m = csv_row({"perceived", "actual", "alignment", "waste_kind", "count"});
    for (int p = 0; p < 3; ++p) {
      for (int a = 0; a < 3; ++a) {
        const auto cell = scenario::perception_reality_cell(static_cast<UVScenario>(p + 1),
                                                            static_cast<UVScenario>(a + 1));
        m += csv_row({std::string(to_string(cell.perceived)), std::string(to_string(cell.actual)),
                      std::string(scenario::to_string(cell.alignment)),
                      std::string(scenario::to_string(cell.waste_kind)),
                      std::to_string(b.perception[p][a])});
      }
    }
    files.push_back({"perception.csv", m});
  }
  if (wants(s, Section::Cvss)) {
    std::string c = csv_row({"team", "timestamp", "dimension", "score", "band"});
    for (const auto& r : b.maturity) {
      for (const auto& [dim, res] : r.dimensions) {
        c += csv_row({r.team, r.timestamp, std::string(to_string(dim)), num(res.score),
                      std::string(maturity::to_string(res.band))});
      }
      c += csv_row({r.team, r.timestamp, "Overall", num(r.overall), ""});
    }
    files.push_back({"maturity.csv", c});
  }
  if (wants(s, Section::Phase)) {
    std::string c = csv_row({"current_phase", "rule_id", "exit_of_phase", "satisfied", "evidence"});
    for (const auto& r : b.phase.rules) {
      c += csv_row({std::to_string(b.phase.current_phase), r.rule_id,
                    std::to_string(r.exit_of_phase), r.satisfied ? "true" : "false", r.evidence});
    }
    files.push_back({"phase.csv", c});
  }
  if (wants(s, Section::Waste)) {
    std::string c = csv_row({"waste_point", "triggered", "evidence", "areas"});
    for (const auto& w : b.waste) {
      c += csv_row({w.waste_point, w.triggered ? "true" : "false", w.evidence, join(w.areas, " ")});
    }
    files.push_back({"waste.csv", c});
  }
  return files;
}

// ---- Schema ---------------------------------------------------------------

struct Checker {
  std::vector<std::string> errors;

  bool expect(bool ok, const std::string& where, const std::string& what) {
    if (!ok) errors.push_back(where + ": " + what);
    return ok;
  }

  bool object_with(const json& j, const std::string& where,
                   std::initializer_list<std::pair<const char*, json::value_t>> fields,
                   bool nullable_numbers = false) {
    if (!expect(j.is_object(), where, "expected object")) return false;
    bool ok = true;
    for (const auto& [key, type] : fields) {
      const std::string at = where + "." + key;
      if (!expect(j.contains(key), at, "missing")) {
        ok = false;
        continue;
      }
      const auto& v = j.at(key);
      bool match = false;
      switch (type) {
        case json::value_t::number_float: match = v.is_number() || (nullable_numbers && v.is_null()); break;
        case json::value_t::number_unsigned: match = v.is_number_unsigned() || v.is_number_integer(); break;
        case json::value_t::string: match = v.is_string(); break;
        case json::value_t::boolean: match = v.is_boolean(); break;
        case json::value_t::array: match = v.is_array(); break;
        case json::value_t::object: match = v.is_object(); break;
        default: match = true;
      }
      ok &= expect(match, at, "unexpected type " + std::string(v.type_name()));
    }
    return ok;
  }

  template <typename F>
  void each(const json& doc, const char* key, F&& f) {
    if (!doc.contains(key)) return;
    const auto& arr = doc.at(key);
    if (!expect(arr.is_array(), key, "expected array")) return;
    for (std::size_t i = 0; i < arr.size(); ++i) f(arr[i], std::string(key) + "[" + std::to_string(i) + "]");
  }
};

constexpr const char* kSections[] = {"flow_flux", "flow", "flux", "lcc", "gaps",
                                     "perception", "maturity", "phase", "waste"};

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::UnsupportedFormat, "format '" + std::string(s) + "'");
}

json to_json(const ReportBundle& b, Section s) {
  json doc = {{"schema", kSchemaVersion}, {"generated_at", b.generated_at}};
  if (wants(s, Section::FlowFlux)) doc["flow_flux"] = flow_flux_json(b.rows);
  if (wants(s, Section::Flow)) doc["flow"] = flow_json(b.flow);
  if (wants(s, Section::Flux)) doc["flux"] = flux_json(b.flux);
  if (wants(s, Section::Lcc)) doc["lcc"] = lcc_json(b.lcc);
  if (wants(s, Section::Gaps)) {
    doc["gaps"] = gaps_json(b);
    doc["perception"] = perception_json(b);
  }
  if (wants(s, Section::Cvss)) doc["maturity"] = maturity_json(b.maturity);
  if (wants(s, Section::Phase)) doc["phase"] = phase_json(b.phase);
  if (wants(s, Section::Waste)) doc["waste"] = waste_json(b.waste);
  return doc;
}

std::vector<RenderedFile> render_report(const ReportBundle& b, Format f, Section s) {
  switch (f) {
    case Format::Text: return {{"report.txt", text_report(b, s)}};
    case Format::Json: return {{"report.json", to_json(b, s).dump(2) + "\n"}};
    case Format::Csv: return csv_report(b, s);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown format");
}

std::string flow_flux_table(const std::vector<report::FlowFluxRow>& rows) {
  const std::vector<std::string> headers = {
      "KNOWLEDGE AREA", "DENSITY", "RECIPROCITY", "TACIT:EXPLICIT", "KNOWLEDGE FLUX",
      "KEY OBSERVATIONS FROM NETWORK GRAPH", "HEALTH ASSESSMENT"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({r.area_name.empty() ? r.area : r.area_name,
                     r.density ? fixed(*r.density, 2) : "n/a",
                     r.reciprocity ? pct(*r.reciprocity) : "n/a",
                     r.split ? pct(r.split->tacit_pct) + ":" + pct(r.split->explicit_pct) : "n/a",
                     r.flux ? fixed(*r.flux, 2) : "n/a",
                     r.insufficient_data ? "insufficient data: " + r.note : join(r.observations, "; "),
                     r.health ? std::string(report::to_string(*r.health)) : "n/a"});
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += " | ";
      out += row[i];
      if (i + 1 < row.size()) out += std::string(width[i] - row[i].size(), ' ');
    }
    return out + "\n";
  };
  std::string out = line(headers);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 3 * (width.size() - 1), '-') + "\n";
  for (const auto& row : cells) out += line(row);
  return out;
}

std::vector<std::string> check_report_schema(const json& doc, bool complete) {
  using T = json::value_t;
  Checker c;
  if (!c.expect(doc.is_object(), "$", "expected object")) return c.errors;
  c.expect(doc.contains("schema") && doc["schema"] == kSchemaVersion, "$.schema",
           "must equal " + std::string(kSchemaVersion));
  c.expect(doc.contains("generated_at") && doc["generated_at"].is_string(), "$.generated_at",
           "missing or not a string");
  for (const auto& [key, value] : doc.items()) {
    const bool known = key == "schema" || key == "generated_at" ||
                       std::find_if(std::begin(kSections), std::end(kSections),
                                    [&](const char* s) { return key == s; }) != std::end(kSections);
    c.expect(known, "$." + key, "unknown property");
  }
  if (complete) {
    for (const char* s : kSections) c.expect(doc.contains(s), std::string("$.") + s, "missing section");
  }

  c.each(doc, "flow_flux", [&](const json& r, const std::string& at) {
    if (!c.object_with(r, at, {{"area", T::string}, {"area_name", T::string},
                               {"density", T::number_float}, {"reciprocity", T::number_float},
                               {"tacit_pct", T::number_float}, {"explicit_pct", T::number_float},
                               {"flux", T::number_float}, {"observations", T::array},
                               {"insufficient_data", T::boolean}, {"note", T::string}},
                       true)) {
      return;
    }
    const auto& h = r.value("health", json());
    c.expect(h.is_null() || h == "RED" || h == "YELLOW" || h == "GREEN", at + ".health",
             "must be RED, YELLOW, GREEN or null");
    if (r["density"].is_number()) {
      const double d = r["density"];
      c.expect(d >= 0.0 && d <= 1.0, at + ".density", "outside [0, 1]");
    }
    if (r["reciprocity"].is_number()) {
      const double v = r["reciprocity"];
      c.expect(v >= 0.0 && v <= 100.0, at + ".reciprocity", "outside [0, 100]");
    }
  });
  c.each(doc, "flow", [&](const json& r, const std::string& at) {
    if (!c.object_with(r, at, {{"area", T::string}, {"cut_points", T::array}, {"cliques", T::array},
                               {"most_approached", T::array}, {"quadrant", T::string}})) {
      return;
    }
    const auto q = r["quadrant"].get<std::string>();
    c.expect(q == "CoPReady" || q == "QuickWin" || q == "ExpandNetwork" || q == "Foundational",
             at + ".quadrant", "unknown quadrant " + q);
  });
  c.each(doc, "flux", [&](const json& r, const std::string& at) {
    if (!c.object_with(r, at, {{"area", T::string}, {"tie_count", T::number_unsigned},
                               {"decision_count", T::number_unsigned}, {"flux", T::number_float},
                               {"verdict", T::string}, {"recommendation", T::string}})) {
      return;
    }
    const auto v = r["verdict"].get<std::string>();
    c.expect(v == "Optimal" || v == "EnhanceFlux" || v == "InsufficientData", at + ".verdict",
             "unknown verdict " + v);
  });
  c.each(doc, "lcc", [&](const json& r, const std::string& at) {
    c.object_with(r, at, {{"area", T::string}, {"counts", T::array},
                          {"recorded_total", T::number_unsigned},
                          {"unrecorded_total", T::number_unsigned}, {"projection", T::array},
                          {"dropped_columns", T::array}, {"projection_note", T::string}});
  });
  if (doc.contains("gaps")) {
    c.object_with(doc["gaps"], "$.gaps", {{"scenarios", T::array}, {"tally", T::object}});
  }
  if (doc.contains("perception")) {
    if (c.object_with(doc["perception"], "$.perception", {{"matrix", T::array}, {"cells", T::array}})) {
      const auto& m = doc["perception"]["matrix"];
      c.expect(m.size() == 3 && std::all_of(m.begin(), m.end(), [](const json& row) {
                 return row.is_array() && row.size() == 3;
               }),
               "$.perception.matrix", "must be 3x3");
      c.expect(doc["perception"]["cells"].size() == 9, "$.perception.cells", "must list 9 cells");
    }
  }
  c.each(doc, "maturity", [&](const json& r, const std::string& at) {
    c.object_with(r, at, {{"team", T::string}, {"timestamp", T::string}, {"dimensions", T::object},
                          {"not_assessed", T::array}, {"overall", T::number_float}});
  });
  if (doc.contains("phase") &&
      c.object_with(doc["phase"], "$.phase", {{"current_phase", T::number_unsigned}, {"rules", T::array}})) {
    const int p = doc["phase"]["current_phase"];
    c.expect(p >= 1 && p <= 5, "$.phase.current_phase", "outside 1..5");
  }
  c.each(doc, "waste", [&](const json& r, const std::string& at) {
    c.object_with(r, at, {{"waste_point", T::string}, {"triggered", T::boolean},
                          {"evidence", T::string}, {"areas", T::array}});
  });
  return c.errors;
}

}  // namespace kvstream::render
