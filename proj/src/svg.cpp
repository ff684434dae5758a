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

#include "kvstream/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kvstream/error.hpp"

namespace kvstream::svg {

namespace {

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void header(std::ostringstream& os, const std::string& title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
     << "<title>" << xml_escape(title) << "</title>\n"
     << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& os, const std::string& x_label, const std::string& y_label) {
  const double left = kMargin, right = kWidth - kMargin;
  const double top = kMargin, bottom = kHeight - kMargin;
  os << "<line class=\"axis\" x1=\"" << f2(left) << "\" y1=\"" << f2(bottom) << "\" x2=\""
     << f2(right) << "\" y2=\"" << f2(bottom) << "\" stroke=\"black\"/>\n"
     << "<line class=\"axis\" x1=\"" << f2(left) << "\" y1=\"" << f2(bottom) << "\" x2=\""
     << f2(left) << "\" y2=\"" << f2(top) << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << f2(kWidth / 2) << "\" y=\"" << f2(kHeight - 20)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(x_label) << "</text>\n"
     << "<text x=\"20\" y=\"" << f2(kHeight / 2) << "\" text-anchor=\"middle\" font-size=\"14\""
     << " transform=\"rotate(-90 20 " << f2(kHeight / 2) << ")\">" << xml_escape(y_label)
     << "</text>\n";
}

void write(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

std::string density_reciprocity_svg(const std::vector<report::FlowFluxRow>& rows,
                                    const flow::Thresholds& t) {
  std::ostringstream os;
  header(os, "Density - Reciprocity Analysis");
  axes(os, "Density", "Reciprocity (%)");

  for (int i = 0; i <= 4; ++i) {
    const double v = i * 0.25;
    os << "<text class=\"tick\" x=\"" << f2(density_to_x(v)) << "\" y=\"" << f2(kHeight - kMargin + 16)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << f2(v) << "</text>\n";
    os << "<text class=\"tick\" x=\"" << f2(kMargin - 6) << "\" y=\"" << f2(reciprocity_to_y(v * 100) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << static_cast<int>(v * 100) << "</text>\n";
  }

  const double tx = density_to_x(t.density_hi);
  const double ty = reciprocity_to_y(t.reciprocity_hi);
  os << "<line class=\"threshold\" x1=\"" << f2(tx) << "\" y1=\"" << f2(kMargin) << "\" x2=\"" << f2(tx)
     << "\" y2=\"" << f2(kHeight - kMargin) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  os << "<line class=\"threshold\" x1=\"" << f2(kMargin) << "\" y1=\"" << f2(ty) << "\" x2=\""
     << f2(kWidth - kMargin) << "\" y2=\"" << f2(ty) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";

  struct Label { double x, y; const char* text; };
  const Label labels[] = {
      {(tx + kWidth - kMargin) / 2, kMargin + 20, "Community of practice ready"},
      {(tx + kWidth - kMargin) / 2, kHeight - kMargin - 10, "Quick win: improve reciprocity"},
      {(kMargin + tx) / 2, kMargin + 20, "Expand network"},
      {(kMargin + tx) / 2, kHeight - kMargin - 10, "Foundational"},
  };
  for (const auto& l : labels) {
    os << "<text class=\"quadrant\" x=\"" << f2(l.x) << "\" y=\"" << f2(l.y)
       << "\" text-anchor=\"middle\" font-size=\"12\" fill=\"gray\">" << l.text << "</text>\n";
  }

  for (const auto& r : rows) {
    if (!r.density || !r.reciprocity) continue;
    const double x = density_to_x(*r.density);
    const double y = reciprocity_to_y(*r.reciprocity);
    const auto name = xml_escape(r.area_name.empty() ? r.area : r.area_name);
    os << "<circle class=\"point\" cx=\"" << f2(x) << "\" cy=\"" << f2(y)
       << "\" r=\"6\" fill=\"steelblue\"><title>" << name << "</title></circle>\n";
    os << "<text class=\"label\" x=\"" << f2(x + 9) << "\" y=\"" << f2(y - 9)
       << "\" font-size=\"11\">" << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string flux_svg(const std::vector<flux::FluxAssessment>& items) {
  std::ostringstream os;
  header(os, "Knowledge Flux Analysis");
  axes(os, "Knowledge area", "Knowledge flux (ties per decision)");
  os << "<defs><marker id=\"arrowhead\" markerWidth=\"10\" markerHeight=\"7\" refX=\"5\" refY=\"3.5\""
        " orient=\"auto\"><polygon points=\"0 0, 10 3.5, 0 7\" fill=\"firebrick\"/></marker></defs>\n";

  double top = 1.0;
  for (const auto& a : items) top = std::max(top, a.flux);
  top = std::ceil(top * 1.2 * 10.0) / 10.0;
  const double plot_h = kHeight - 2 * kMargin;
  const double plot_w = kWidth - 2 * kMargin;
  auto to_y = [&](double v) { return kHeight - kMargin - v / top * plot_h; };

  for (int i = 0; i <= 4; ++i) {
    const double v = top * i / 4.0;
    os << "<text class=\"tick\" x=\"" << f2(kMargin - 6) << "\" y=\"" << f2(to_y(v) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << f2(v) << "</text>\n";
  }

  const double slot = items.empty() ? plot_w : plot_w / static_cast<double>(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& a = items[i];
    const double bw = slot * 0.5;
    const double x = kMargin + slot * static_cast<double>(i) + (slot - bw) / 2;
    const double y = to_y(a.flux);
    const bool enhance = a.verdict == flux::Verdict::EnhanceFlux;
    os << "<rect class=\"bar\" x=\"" << f2(x) << "\" y=\"" << f2(y) << "\" width=\"" << f2(bw)
       << "\" height=\"" << f2(kHeight - kMargin - y) << "\" fill=\""
       << (enhance ? "orange" : "seagreen") << "\"><title>" << xml_escape(a.area) << " flux "
       << f2(a.flux) << "</title></rect>\n";
    const double cx = x + bw / 2;
    os << "<text class=\"label\" x=\"" << f2(cx) << "\" y=\"" << f2(kHeight - kMargin + 16)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << xml_escape(a.area) << "</text>\n";
    os << "<text class=\"annotation\" x=\"" << f2(cx) << "\" y=\"" << f2(y - 8)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << f2(a.flux) << " / favorable "
       << (a.favorable_rate ? std::to_string(static_cast<int>(std::lround(*a.favorable_rate * 100))) + "%"
                            : std::string("n/a"))
       << "</text>\n";
    if (enhance) {
      const double y2 = std::max(kMargin, y - 60);
      os << "<line class=\"arrow\" x1=\"" << f2(cx) << "\" y1=\"" << f2(y - 20) << "\" x2=\"" << f2(cx)
         << "\" y2=\"" << f2(y2) << "\" stroke=\"firebrick\" stroke-width=\"2\""
         << " marker-end=\"url(#arrowhead)\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::filesystem::path> emit_svg_plots(const report::ReportBundle& b,
                                                  const std::filesystem::path& out_dir,
                                                  const flow::Thresholds& t) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  const auto scatter = out_dir / "density_reciprocity.svg";
  const auto fluxes = out_dir / "knowledge_flux.svg";
  write(scatter, density_reciprocity_svg(b.rows, t));
  write(fluxes, flux_svg(b.flux));
  return {scatter, fluxes};
}

}  // namespace kvstream::svg
