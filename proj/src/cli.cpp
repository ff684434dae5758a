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

#include "kvstream/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "kvstream/config.hpp"
#include "kvstream/dataset_io.hpp"
#include "kvstream/error.hpp"
#include "kvstream/render.hpp"
#include "kvstream/report.hpp"
#include "kvstream/svg.hpp"

namespace kvstream::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string data = ".";
  std::string format = "text";
  std::vector<std::string> areas;
  std::string config;
  std::string out;
  std::string timestamp;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  f << content;
}

void emit(const std::vector<render::RenderedFile>& files, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (files.size() > 1) out << (i ? "\n" : "") << "# " << files[i].name << "\n";
      out << files[i].content;
    }
    return;
  }
  if (files.size() == 1 && render::parse_format(o.format) != render::Format::Csv) {
    write_file(o.out, files.front().content);
    out << "wrote " << o.out << "\n";
    return;
  }
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + o.out + ": " + ec.message());
  for (const auto& f : files) {
    write_file(fs::path(o.out) / f.name, f.content);
    out << "wrote " << (fs::path(o.out) / f.name).string() << "\n";
  }
}

void print_violations(const std::vector<Violation>& v, std::ostream& os) {
  for (const auto& x : v) os << x.rule << "\t" << x.entity << "\t" << x.detail << "\n";
}

int do_validate(const Options& o, std::ostream& out) {
  const auto format = render::parse_format(o.format);
  const Dataset d = parse_dataset(o.data);
  const auto violations = validate_dataset(d);
  if (format == render::Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : violations) {
      arr.push_back({{"rule", v.rule}, {"entity", v.entity}, {"detail", v.detail}});
    }
    out << nlohmann::json{{"valid", violations.empty()}, {"violations", arr}}.dump(2) << "\n";
  } else if (format == render::Format::Csv) {
    out << "rule,entity,detail\n";
    for (const auto& v : violations) {
      out << csv_escape(v.rule) << "," << csv_escape(v.entity) << "," << csv_escape(v.detail) << "\n";
    }
  } else if (violations.empty()) {
    out << "valid: " << d.actors.size() << " actors, " << d.areas.size() << " areas, "
        << d.ties.size() << " ties, " << d.decisions.size() << " decisions\n";
  } else {
    out << violations.size() << " violation(s)\n";
    print_violations(violations, out);
  }
  return violations.empty() ? kOk : kViolations;
}

int do_analysis(const std::string& command, const Options& o, std::ostream& out) {
  const auto format = render::parse_format(o.format);
  const Config cfg = o.config.empty() ? Config{} : load_config(o.config);
  const Dataset d = load_dataset(o.data);
  const std::set<AreaId> areas(o.areas.begin(), o.areas.end());
  const auto bundle =
      report::build_report_bundle(d, cfg, o.timestamp.empty() ? utc_now() : o.timestamp, areas);

  if (command == "plot") {
    const fs::path dir = o.out.empty() ? fs::path("plots") : fs::path(o.out);
    for (const auto& p : svg::emit_svg_plots(bundle, dir, cfg.flow)) out << "wrote " << p.string() << "\n";
    return kOk;
  }

  using render::Section;
  static const std::map<std::string, Section> sections = {
      {"flow", Section::Flow}, {"flux", Section::Flux},   {"lcc", Section::Lcc},
      {"gaps", Section::Gaps}, {"cvss", Section::Cvss},   {"phase", Section::Phase},
      {"report", Section::All}};
  Section section = sections.at(command);
  emit(render::render_report(bundle, format, section), o, out);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Knowledge value stream analysis toolkit", "kvstream"};
  app.require_subcommand(1);
  app.add_option("--data", o.data, "Dataset directory")->capture_default_str();
  app.add_option("--format", o.format, "Output format: text, json or csv")->capture_default_str();
  app.add_option("--area", o.areas, "Restrict per-area sections to this area (repeatable)");
  app.add_option("--config", o.config, "JSON file of threshold overrides");
  app.add_option("--out", o.out, "Output file, or directory for csv and plot");
  app.add_option("--timestamp", o.timestamp, "Report generation timestamp (default: now, UTC)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check dataset invariants; exit 1 when violations exist"},
      {"flow", "Per-area knowledge-flow measures"},
      {"flux", "Knowledge flux and favorable learning-cycle rate per area"},
      {"lcc", "Learning-cycle consequence distribution and 1-D decision projection"},
      {"gaps", "Knowledge-gap scenarios and the perception-reality matrix"},
      {"cvss", "CVSS maturity scorecards"},
      {"phase", "Phase-wise deployment status"},
      {"report", "Full flow-flux report with every section"},
      {"plot", "Write density-reciprocity and flux SVG charts"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "validate") return do_validate(o, out);
    return do_analysis(command, o, out);
  } catch (const ValidationError& e) {
    err << "dataset is invalid: " << e.what() << "\n";
    print_violations(e.violations(), err);
    return kViolations;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kInputError : kAnalysisError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace kvstream::cli
