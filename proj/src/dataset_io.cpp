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

#include "kvstream/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kvstream {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string summarize(const std::vector<Violation>& v) {
  std::string msg = std::to_string(v.size()) + " violation(s)";
  if (!v.empty()) msg += ", first: " + v.front().rule + " (" + v.front().entity + ")";
  return msg;
}

[[noreturn]] void parse_fail(const fs::path& file, std::size_t line,
                             const std::string& what) {
  throw Error(ErrorCode::ParseError,
              file.filename().string() + ":" + std::to_string(line) + ": " + what);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

fs::path require(const fs::path& dir, const char* name) {
  fs::path p = dir / name;
  if (!fs::is_regular_file(p)) {
    throw Error(ErrorCode::MissingFile, "required file " + p.string() + " not found");
  }
  return p;
}

// Returns data rows (header excluded) paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_csv(
    const fs::path& path, const std::vector<std::string>& required_header) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (header.empty()) {
      header = fields;
      for (std::size_t i = 0; i < required_header.size(); ++i) {
        if (i >= header.size() || header[i] != required_header[i]) {
          parse_fail(path, lineno, "expected header column '" + required_header[i] + "'");
        }
      }
      continue;
    }
    rows.emplace_back(lineno, std::move(fields));
  }
  if (header.empty()) parse_fail(path, 1, "missing header row");
  return rows;
}

json read_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.filename().string() + ": " + e.what());
  }
}

std::string json_string(const json& obj, const char* key, const fs::path& file,
                        std::size_t index) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    parse_fail(file, index, std::string("record needs string field '") + key + "'");
  }
  return obj[key].get<std::string>();
}

std::set<std::string> json_string_set(const json& obj, const char* key,
                                      const fs::path& file, std::size_t index) {
  std::set<std::string> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) parse_fail(file, index, std::string("'") + key + "' must be an array");
  for (const auto& v : obj[key]) {
    if (!v.is_string()) parse_fail(file, index, std::string("'") + key + "' must hold strings");
    out.insert(v.get<std::string>());
  }
  return out;
}

bool is_iso8601(const std::string& s) {
  static const std::regex re(
      R"(^\d{4}-\d{2}-\d{2}(T\d{2}:\d{2}(:\d{2}(\.\d+)?)?(Z|[+-]\d{2}:?\d{2})?)?$)");
  return std::regex_match(s, re);
}

// JSON arrays report their element index as the "line" so messages stay
// uniform with the CSV readers.
template <typename F>
void for_each_record(const fs::path& file, const json& doc, F&& f) {
  if (!doc.is_array()) parse_fail(file, 0, "top-level value must be an array");
  std::size_t index = 0;
  for (const auto& rec : doc) {
    ++index;
    if (!rec.is_object()) parse_fail(file, index, "record must be an object");
    try {
      f(rec, index);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError) throw;
      const std::string what = e.what();
      if (what.find(file.filename().string()) != std::string::npos) throw;
      parse_fail(file, index, what);
    }
  }
}

void parse_actors(const fs::path& file, Dataset& d) {
  for (auto& [line, f] : read_csv(file, {"id", "name", "kind"})) {
    if (f.size() != 3) parse_fail(file, line, "expected 3 fields");
    try {
      d.actors.push_back({f[0], f[1], parse_actor_kind(f[2])});
    } catch (const Error& e) {
      parse_fail(file, line, e.what());
    }
  }
}

void parse_areas(const fs::path& file, Dataset& d) {
  for (auto& [line, f] : read_csv(file, {"id", "name"})) {
    if (f.size() != 2) parse_fail(file, line, "expected 2 fields");
    d.areas.push_back({f[0], f[1]});
  }
}

void parse_ties(const fs::path& file, Dataset& d) {
  for (auto& [line, f] : read_csv(file, {"area", "source", "target"})) {
    if (f.size() != 3 && f.size() != 4) parse_fail(file, line, "expected 3 or 4 fields");
    int weight = 1;
    if (f.size() == 4 && !f[3].empty()) {
      const auto& w = f[3];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        parse_fail(file, line, "weight '" + w + "' is not an integer");
      }
      if (weight < 1) parse_fail(file, line, "weight must be at least 1, got " + w);
    }
    d.ties.push_back({f[0], f[1], f[2], weight});
  }
}

void parse_decisions(const fs::path& file, Dataset& d) {
  for_each_record(file, read_json(file), [&](const json& rec, std::size_t i) {
    DecisionRecord r;
    r.id = json_string(rec, "id", file, i);
    r.product = json_string(rec, "product", file, i);
    r.area = json_string(rec, "area", file, i);
    if (rec.contains("attributes")) {
      if (!rec["attributes"].is_object()) parse_fail(file, i, "'attributes' must be an object");
      for (const auto& [name, value] : rec["attributes"].items()) {
        if (value.is_number()) {
          r.attributes.emplace(name, value.get<double>());
        } else if (value.is_string()) {
          r.attributes.emplace(name, value.get<std::string>());
        } else {
          parse_fail(file, i, "attribute '" + name + "' must be a number or string");
        }
      }
    }
    r.actors = json_string_set(rec, "actors", file, i);
    if (rec.contains("lcc") && !rec["lcc"].is_null()) {
      const auto& l = rec["lcc"];
      if (!l.is_object()) parse_fail(file, i, "'lcc' must be an object");
      r.lcc = LccOutcome{parse_consequence(json_string(l, "consequence", file, i)),
                         parse_duration(json_string(l, "duration", file, i))};
    }
    if (rec.contains("uncertainty") && !rec["uncertainty"].is_null()) {
      r.uncertainty = json_string(rec, "uncertainty", file, i);
    }
    d.decisions.push_back(std::move(r));
  });
}

void parse_gaps(const fs::path& file, Dataset& d) {
  for_each_record(file, read_json(file), [&](const json& rec, std::size_t i) {
    GapAssessment g;
    g.decision = json_string(rec, "decision", file, i);
    g.actual = json_string_set(rec, "actual", file, i);
    g.perceived = json_string_set(rec, "perceived", file, i);
    if (rec.contains("perceived_uv")) g.perceived_uv = parse_uv(json_string(rec, "perceived_uv", file, i));
    if (rec.contains("actual_uv")) g.actual_uv = parse_uv(json_string(rec, "actual_uv", file, i));
    d.gaps.push_back(std::move(g));
  });
}

void parse_scorecards(const fs::path& file, Dataset& d) {
  for_each_record(file, read_json(file), [&](const json& rec, std::size_t i) {
    Scorecard s;
    s.team = json_string(rec, "team", file, i);
    s.timestamp = json_string(rec, "timestamp", file, i);
    if (!is_iso8601(s.timestamp)) {
      parse_fail(file, i, "timestamp '" + s.timestamp + "' is not ISO-8601");
    }
    if (!rec.contains("items") || !rec["items"].is_array()) {
      parse_fail(file, i, "scorecard needs an 'items' array");
    }
    for (const auto& item : rec["items"]) {
      if (!item.is_object()) parse_fail(file, i, "scorecard item must be an object");
      s.items.push_back({parse_dimension(json_string(item, "dimension", file, i)),
                         item.value("statement", std::string()),
                         parse_rating(json_string(item, "rating", file, i))});
    }
    d.scorecards.push_back(std::move(s));
  });
}

void parse_codebook(const fs::path& file, Dataset& d) {
  const json doc = read_json(file);
  if (!doc.is_object()) parse_fail(file, 0, "codebook must be an object");
  for (const auto& [attr, table] : doc.items()) {
    if (!table.is_object()) parse_fail(file, 0, "codebook entry '" + attr + "' must be an object");
    for (const auto& [category, ordinal] : table.items()) {
      if (!ordinal.is_number()) {
        parse_fail(file, 0, "ordinal for " + attr + "/" + category + " must be a number");
      }
      d.codebook[attr][category] = ordinal.get<double>();
    }
  }
}

void parse_uncertainty(const fs::path& file, Dataset& d) {
  const json doc = read_json(file);
  if (!doc.is_object()) parse_fail(file, 0, "uncertainty scale must be an object");
  UncertaintyScale s;
  s.levels = json_string_set(doc, "levels", file, 0);
  if (doc.contains("order")) {
    if (!doc["order"].is_array()) parse_fail(file, 0, "'order' must be an array");
    std::size_t i = 0;
    for (const auto& pair : doc["order"]) {
      ++i;
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        parse_fail(file, i, "order entries must be [lower, higher] string pairs");
      }
      s.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  d.uncertainty = std::move(s);
}

void derive_areas(Dataset& d) {
  std::set<std::string> ids;
  for (const auto& t : d.ties) ids.insert(t.area);
  for (const auto& x : d.decisions) ids.insert(x.area);
  for (const auto& id : ids) d.areas.push_back({id, id});
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::ValidationFailed, summarize(violations)),
      violations_(std::move(violations)) {}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Dataset parse_dataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::MissingFile, "dataset directory " + dir.string() + " not found");
  }
  Dataset d;
  parse_actors(require(dir, "actors.csv"), d);
  parse_ties(require(dir, "ties.csv"), d);
  parse_decisions(require(dir, "decisions.json"), d);
  parse_gaps(require(dir, "gaps.json"), d);
  parse_scorecards(require(dir, "scorecards.json"), d);
  if (fs::is_regular_file(dir / "areas.csv")) {
    parse_areas(dir / "areas.csv", d);
  } else {
    derive_areas(d);
  }
  if (fs::is_regular_file(dir / "codebook.json")) parse_codebook(dir / "codebook.json", d);
  if (fs::is_regular_file(dir / "uncertainty.json")) parse_uncertainty(dir / "uncertainty.json", d);
  return d;
}

Dataset load_dataset(const fs::path& dir) {
  Dataset d = parse_dataset(dir);
  auto violations = validate_dataset(d);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return d;
}

void save_dataset(const Dataset& d, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  std::string csv = "id,name,kind\n";
  for (const auto& a : d.actors) {
    csv += csv_escape(a.id) + "," + csv_escape(a.name) + "," + std::string(to_string(a.kind)) + "\n";
  }
  write_file(dir / "actors.csv", csv);

  csv = "id,name\n";
  for (const auto& a : d.areas) csv += csv_escape(a.id) + "," + csv_escape(a.name) + "\n";
  write_file(dir / "areas.csv", csv);

  csv = "area,source,target,weight\n";
  for (const auto& t : d.ties) {
    csv += csv_escape(t.area) + "," + csv_escape(t.source) + "," + csv_escape(t.target) +
           "," + std::to_string(t.weight) + "\n";
  }
  write_file(dir / "ties.csv", csv);

  json decisions = json::array();
  for (const auto& x : d.decisions) {
    json attrs = json::object();
    for (const auto& [name, value] : x.attributes) {
      std::visit([&](const auto& v) { attrs[name] = v; }, value);
    }
    json rec = {{"id", x.id}, {"product", x.product}, {"area", x.area},
                {"attributes", attrs}, {"actors", x.actors}};
    if (x.lcc) {
      rec["lcc"] = {{"consequence", to_string(x.lcc->consequence)},
                    {"duration", to_string(x.lcc->duration)}};
    }
    if (x.uncertainty) rec["uncertainty"] = *x.uncertainty;
    decisions.push_back(std::move(rec));
  }
  write_file(dir / "decisions.json", decisions.dump(2) + "\n");

  json gaps = json::array();
  for (const auto& g : d.gaps) {
    json rec = {{"decision", g.decision}, {"actual", g.actual}, {"perceived", g.perceived}};
    if (g.perceived_uv) rec["perceived_uv"] = to_string(*g.perceived_uv);
    if (g.actual_uv) rec["actual_uv"] = to_string(*g.actual_uv);
    gaps.push_back(std::move(rec));
  }
  write_file(dir / "gaps.json", gaps.dump(2) + "\n");

  json cards = json::array();
  for (const auto& s : d.scorecards) {
    json items = json::array();
    for (const auto& it : s.items) {
      items.push_back({{"dimension", to_string(it.dimension)},
                       {"statement", it.statement},
                       {"rating", to_string(it.rating)}});
    }
    cards.push_back({{"team", s.team}, {"timestamp", s.timestamp}, {"items", items}});
  }
  write_file(dir / "scorecards.json", cards.dump(2) + "\n");

  if (!d.codebook.empty()) write_file(dir / "codebook.json", json(d.codebook).dump(2) + "\n");
  if (d.uncertainty) {
    json order = json::array();
    for (const auto& [lo, hi] : d.uncertainty->order) order.push_back({lo, hi});
    json doc = {{"levels", d.uncertainty->levels}, {"order", order}};
    write_file(dir / "uncertainty.json", doc.dump(2) + "\n");
  }
}

}  // namespace kvstream
