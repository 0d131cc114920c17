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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace stancecraft::app {

enum class ChartKind { GroupedBar, DiffBar };

ChartKind parse_chart_kind(std::string_view name);

struct ChartRow {
  std::string label;
  std::vector<double> values;
};

struct ChartOptions {
  std::string title;
  // Legend entries, one per series.
  std::vector<std::string> series{"left", "right"};
};

// Horizontal bar chart. Grouped bars draw one rect per value; diff bars
// draw one rect per row, colored by sign. No other rect elements are
// emitted. Throws ConfigError on empty rows, mismatched series counts or
// non-finite values.
std::string render_chart(const std::vector<ChartRow>& rows, ChartKind kind,
                         const ChartOptions& options = {});

void emit_chart(const std::vector<ChartRow>& rows, ChartKind kind,
                const std::filesystem::path& path,
                const ChartOptions& options = {});

std::string xml_escape(std::string_view text);

}  // namespace stancecraft::app
