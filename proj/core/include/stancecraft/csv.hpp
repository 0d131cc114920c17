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

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace stancecraft::csv {

// One parsed RFC-4180 record together with the 1-based physical line on
// which it started.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// Streaming RFC-4180 reader. Quoted fields may contain commas, doubled
// quotes and line breaks. CRLF and LF line endings are both accepted.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Returns the next record, or nullopt at end of input. A quoted field
  // left open at end of input sets last_malformed().
  std::optional<Row> next();

  bool last_malformed() const { return malformed_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  bool malformed_ = false;
};

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace stancecraft::csv
