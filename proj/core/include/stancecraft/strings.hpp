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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stancecraft {

// ASCII lowercase; bytes >= 0x80 pass through untouched so UTF-8 survives.
std::string to_lower_ascii(std::string_view text);

bool is_ascii_space(char c);
bool is_ascii_punct(char c);

// True when every byte is ASCII punctuation (and the string is non-empty).
bool is_punctuation_token(std::string_view token);

bool has_digit(std::string_view token);
bool is_lower_alpha(std::string_view token);

bool is_valid_utf8(std::string_view bytes);

std::string_view trim(std::string_view text);

std::vector<std::string> split_on(std::string_view text, char sep);

// Splits "w1 w2" bigram feature strings; a unigram yields one element.
std::vector<std::string> split_words(std::string_view text);

// Reads a one-entry-per-line list: blank lines and '#' comments skipped,
// entries trimmed. Throws ConfigError if the file cannot be opened.
std::vector<std::string> read_word_list(const std::string& path);

// 64-bit FNV-1a digest, used for manifest input digests.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

// Shortest round-trip decimal representation of a double.
std::string format_double(double value);
// Fixed-point representation with the given number of decimals.
std::string format_fixed(double value, int decimals);

}  // namespace stancecraft
