// Copyright 2026 The Stancecraft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::app {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd"};
constexpr double kLabelWidth = 180.0;
constexpr double kPlotWidth = 480.0;
constexpr double kBarHeight = 14.0;
constexpr double kRowGap = 8.0;
constexpr double kTop = 48.0;

std::string num(double v) { return format_fixed(v, 2); }

}  // namespace

ChartKind parse_chart_kind(std::string_view name) {
  if (name == "grouped_bar") return ChartKind::GroupedBar;
  if (name == "diff_bar") return ChartKind::DiffBar;
  throw ConfigError("unknown chart kind '" + std::string(name) +
                    "' (expected grouped_bar or diff_bar)");
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string render_chart(const std::vector<ChartRow>& rows, ChartKind kind,
                         const ChartOptions& options) {
  if (rows.empty()) throw ConfigError("chart has no rows");
  const std::size_t series = kind == ChartKind::DiffBar ? 1 : rows[0].values.size();
  if (series == 0) throw ConfigError("chart rows have no values");
  if (kind == ChartKind::GroupedBar && series > std::size(kPalette)) {
    throw ConfigError("grouped chart supports at most 4 series");
  }
  double max_abs = 0.0;
  for (const auto& r : rows) {
    if (r.values.size() != series) {
      throw ConfigError("chart row '" + r.label + "' has " +
                        std::to_string(r.values.size()) + " values, expected " +
                        std::to_string(series));
    }
    for (double v : r.values) {
      if (!std::isfinite(v)) throw ConfigError("chart value is not finite");
      if (kind == ChartKind::GroupedBar && v < 0.0) {
        throw ConfigError("grouped bar values must be non-negative");
      }
      max_abs = std::max(max_abs, std::abs(v));
    }
  }
  const double scale = max_abs > 0.0 ? kPlotWidth / max_abs : 0.0;
  const double group_height = kBarHeight * static_cast<double>(series) + kRowGap;
  const double height = kTop + group_height * static_cast<double>(rows.size()) + 16.0;
  const double width = kLabelWidth + kPlotWidth + 80.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << ' ' << num(height) << "\">\n"
      << "<title>" << xml_escape(options.title) << "</title>\n"
      << "<text x=\"" << num(width / 2) << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << xml_escape(options.title) << "</text>\n";

  if (kind == ChartKind::GroupedBar) {
    double lx = kLabelWidth;
    for (std::size_t s = 0; s < series; ++s) {
      const std::string name =
          s < options.series.size() ? options.series[s] : "series " + std::to_string(s + 1);
      svg << "<circle cx=\"" << num(lx) << "\" cy=\"34\" r=\"5\" fill=\""
          << kPalette[s] << "\"/>\n"
          << "<text x=\"" << num(lx + 8) << "\" y=\"38\" font-family=\"sans-serif\" "
             "font-size=\"11\">"
          << xml_escape(name) << "</text>\n";
      lx += 100.0;
    }
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double y0 = kTop + group_height * static_cast<double>(i);
    svg << "<text x=\"" << num(kLabelWidth - 6) << "\" y=\""
        << num(y0 + kBarHeight * static_cast<double>(series) / 2 + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << xml_escape(r.label) << "</text>\n";
    for (std::size_t s = 0; s < series; ++s) {
      const double v = r.values[s];
      const char* fill = kind == ChartKind::DiffBar
                             ? (v >= 0.0 ? kPalette[0] : kPalette[1])
                             : kPalette[s];
      const double y = y0 + kBarHeight * static_cast<double>(s);
      svg << "<rect x=\"" << num(kLabelWidth) << "\" y=\"" << num(y)
          << "\" width=\"" << num(std::abs(v) * scale) << "\" height=\""
          << num(kBarHeight - 2) << "\" fill=\"" << fill << "\"><title>"
          << xml_escape(r.label) << ": " << format_double(v)
          << "</title></rect>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_chart(const std::vector<ChartRow>& rows, ChartKind kind,
                const std::filesystem::path& path, const ChartOptions& options) {
  const std::string svg = render_chart(rows, kind, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write chart to " + path.string());
  out << svg;
  if (!out) throw IoError("failed writing chart to " + path.string());
}

}  // namespace stancecraft::app
