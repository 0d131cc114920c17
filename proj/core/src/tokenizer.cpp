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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stancecraft/strings.hpp"
#include "stancecraft/textprep.hpp"

namespace stancecraft::textprep {
namespace {

bool is_word_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Characters that split a chunk even in the middle of a word.
bool is_hard_separator(char c) {
  switch (c) {
    case ',':
    case ';':
    case '!':
    case '?':
    case '"':
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
    case '<':
    case '>':
    case '|':
      return true;
    default:
      return false;
  }
}

// Maps typographic quotes to their ASCII forms and lowercases.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && text[i] == '\xE2' && text[i + 1] == '\x80') {
      const char c = text[i + 2];
      if (c == '\x98' || c == '\x99') {  // U+2018, U+2019
        out.push_back('\'');
        i += 2;
        continue;
      }
      if (c == '\x9C' || c == '\x9D') {  // U+201C, U+201D
        out.push_back('"');
        i += 2;
        continue;
      }
      if (c == '\xA6') {  // U+2026 ellipsis
        out += "...";
        i += 2;
        continue;
      }
    }
    out.push_back(text[i]);
  }
  return to_lower_ascii(out);
}

// "u.s." and similar: single letters each followed by a period.
bool is_dotted_abbreviation(std::string_view s) {
  if (s.size() < 4 || s.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (!(s[i] >= 'a' && s[i] <= 'z') || s[i + 1] != '.') return false;
  }
  return true;
}

void emit_word(std::string_view core, std::vector<std::string>& out) {
  if (core.empty()) return;
  if (core == "cannot") {
    out.emplace_back("can");
    out.emplace_back("not");
    return;
  }
  if (core.size() > 3 && core.ends_with("n't")) {
    out.emplace_back(core.substr(0, core.size() - 3));
    out.emplace_back("n't");
    return;
  }
  static constexpr std::array<std::string_view, 6> kClitics{
      "'ll", "'re", "'ve", "'s", "'m", "'d"};
  for (auto clitic : kClitics) {
    if (core.size() > clitic.size() && core.ends_with(clitic)) {
      out.emplace_back(core.substr(0, core.size() - clitic.size()));
      out.emplace_back(clitic);
      return;
    }
  }
  out.emplace_back(core);
}

void split_chunk(std::string_view chunk, std::vector<std::string>& out) {
  if (chunk.empty()) return;
  if (is_dotted_abbreviation(chunk)) {
    out.emplace_back(chunk);
    return;
  }

  // Leading punctuation; '#' and '@' open hashtags and mentions.
  std::size_t begin = 0;
  while (begin < chunk.size() && is_ascii_punct(chunk[begin])) {
    const char c = chunk[begin];
    if ((c == '#' || c == '@') && begin + 1 < chunk.size() &&
        is_word_byte(chunk[begin + 1])) {
      break;
    }
    out.emplace_back(1, c);
    ++begin;
  }
  if (begin == chunk.size()) return;

  // Trailing punctuation, collected right to left. Runs of periods stay
  // together as an ellipsis.
  std::size_t end = chunk.size();
  std::vector<std::string> trailing;
  while (end > begin && is_ascii_punct(chunk[end - 1])) {
    if (chunk[end - 1] == '.') {
      std::size_t start = end - 1;
      while (start > begin && chunk[start - 1] == '.') --start;
      trailing.emplace_back(chunk.substr(start, end - start));
      end = start;
    } else {
      trailing.emplace_back(1, chunk[end - 1]);
      --end;
    }
  }

  std::string_view core = chunk.substr(begin, end - begin);
  // Internal hard separators split the core; commas inside numbers stay.
  for (std::size_t i = 0; i < core.size(); ++i) {
    const char c = core[i];
    if (!is_hard_separator(c)) continue;
    if (c == ',' && i > 0 && i + 1 < core.size() && is_digit(core[i - 1]) &&
        is_digit(core[i + 1])) {
      continue;
    }
    split_chunk(core.substr(0, i), out);
    out.emplace_back(1, c);
    split_chunk(core.substr(i + 1), out);
    core = {};
    break;
  }
  emit_word(core, out);

  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    out.push_back(std::move(*it));
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const std::string normalized = normalize(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::string_view view = normalized;
  while (i < view.size()) {
    while (i < view.size() && is_ascii_space(view[i])) ++i;
    std::size_t j = i;
    while (j < view.size() && !is_ascii_space(view[j])) ++j;
    if (j > i) split_chunk(view.substr(i, j - i), tokens);
    i = j;
  }
  return tokens;
}

}  // namespace stancecraft::textprep
