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
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stancecraft::textprep {

struct SuffixRule {
  std::string suffix;
  std::string replacement;
  // Characters that must remain before the suffix for the rule to apply.
  std::size_t min_stem_length = 1;
};

// Dictionary lemmatizer: an exception table consulted first, then the
// first matching suffix rule. The rules encode noun-first defaults.
class LemmaDictionary {
 public:
  LemmaDictionary() = default;
  LemmaDictionary(std::map<std::string, std::string, std::less<>> exceptions,
                  std::vector<SuffixRule> rules);

  // File format: "word<TAB>lemma" lines, a line reading RULES, then
  // "suffix<TAB>replacement<TAB>min_stem_len" lines. '#' starts a comment.
  static LemmaDictionary parse(std::istream& in);
  static LemmaDictionary load(const std::filesystem::path& path);

  std::string lemmatize(std::string_view token) const;

  const std::map<std::string, std::string, std::less<>>& exceptions() const {
    return exceptions_;
  }
  const std::vector<SuffixRule>& rules() const { return rules_; }

 private:
  std::map<std::string, std::string, std::less<>> exceptions_;
  std::vector<SuffixRule> rules_;
};

inline std::string lemmatize(std::string_view token,
                             const LemmaDictionary& dict) {
  return dict.lemmatize(token);
}

}  // namespace stancecraft::textprep
