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

#include "stancecraft/lemmatizer.hpp"

#include <fstream>
#include <string>

#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::textprep {

LemmaDictionary::LemmaDictionary(
    std::map<std::string, std::string, std::less<>> exceptions,
    std::vector<SuffixRule> rules)
    : exceptions_(std::move(exceptions)), rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    if (rule.suffix.empty()) throw ConfigError("lemma rule with empty suffix");
    if (rule.min_stem_length == 0 && rule.replacement.empty()) {
      throw ConfigError("lemma rule '" + rule.suffix +
                        "' could produce an empty lemma");
    }
  }
}

LemmaDictionary LemmaDictionary::parse(std::istream& in) {
  std::map<std::string, std::string, std::less<>> exceptions;
  std::vector<SuffixRule> rules;
  bool in_rules = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (trim(line) == "RULES") {
      in_rules = true;
      continue;
    }
    const auto fields = split_on(line, '\t');
    auto bad = [&](const char* what) {
      return ConfigError("lemma dictionary line " + std::to_string(line_no) +
                         ": " + what);
    };
    if (!in_rules) {
      if (fields.size() != 2) throw bad("expected word<TAB>lemma");
      const auto word = trim(fields[0]);
      const auto lemma = trim(fields[1]);
      if (word.empty() || lemma.empty()) throw bad("empty word or lemma");
      exceptions.emplace(std::string(word), std::string(lemma));
    } else {
      if (fields.size() != 3) {
        throw bad("expected suffix<TAB>replacement<TAB>min_stem_len");
      }
      SuffixRule rule;
      rule.suffix = std::string(trim(fields[0]));
      rule.replacement = std::string(trim(fields[1]));
      try {
        rule.min_stem_length = std::stoul(std::string(trim(fields[2])));
      } catch (const std::exception&) {
        throw bad("min_stem_len is not a number");
      }
      rules.push_back(std::move(rule));
    }
  }
  return LemmaDictionary(std::move(exceptions), std::move(rules));
}

LemmaDictionary LemmaDictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lemma dictionary " + path.string());
  return parse(in);
}

std::string LemmaDictionary::lemmatize(std::string_view token) const {
  if (auto it = exceptions_.find(token); it != exceptions_.end()) {
    return it->second;
  }
  if (!is_lower_alpha(token)) return std::string(token);
  for (const auto& rule : rules_) {
    if (!token.ends_with(rule.suffix)) continue;
    const std::size_t stem_len = token.size() - rule.suffix.size();
    if (stem_len < rule.min_stem_length) continue;
    std::string lemma(token.substr(0, stem_len));
    lemma += rule.replacement;
    if (!lemma.empty()) return lemma;
  }
  return std::string(token);
}

}  // namespace stancecraft::textprep
