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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace stancecraft {

using Timestamp = std::chrono::sys_seconds;

// Parses ISO-8601 date-times: "YYYY-MM-DD", "YYYY-MM-DDTHH:MM[:SS[.fff]]"
// with 'T' or ' ' as separator and an optional "Z" or "+HH:MM"/"-HHMM"
// offset. Values without an offset are taken as UTC. Fractional seconds
// are truncated.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(Timestamp ts);

}  // namespace stancecraft
