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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stancecraft/corpus_store.hpp"
#include "stancecraft/lemmatizer.hpp"
#include "stancecraft/porter_stemmer.hpp"
#include "stancecraft/timestamp.hpp"

namespace stancecraft::textprep {

// Removes every "http://", "https://" or "www." run up to the next
// whitespace character. Everything else is left byte-for-byte.
std::string strip_urls(std::string_view text);

// Treebank-style tokenizer tuned for tweets: lowercases, splits on
// whitespace, detaches leading and trailing punctuation, splits clitics
// ("don't" -> "do" "n't"), and keeps hashtags, mentions, hyphenated words
// and dotted abbreviations whole.
std::vector<std::string> tokenize(std::string_view text);

using WordSet = std::set<std::string, std::less<>>;

struct StopwordPolicy {
  WordSet base_list;
  WordSet custom_additions{"amp", "rt", "u", "w"};
  WordSet negation_exceptions{"not", "no", "n't"};

  // Stoplist file: one lowercase word per line, '#' comments allowed.
  static StopwordPolicy from_file(const std::filesystem::path& stoplist);

  bool is_stopword(std::string_view token) const;
};

// Drops stopwords (except negation exceptions) and standalone punctuation.
std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens, const StopwordPolicy& policy);

enum class Mode { Stem, Lemma };

std::optional<Mode> parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

struct PreprocessOptions {
  Mode mode = Mode::Lemma;
  // Hashtag tokens are kept unless a model asks for them to be dropped.
  bool drop_hashtags = false;
};

struct TokenizedDoc {
  std::vector<std::string> tokens;
  corpus::Stance label = corpus::Stance::Left;
  Timestamp timestamp{};
  std::string source_id;

  friend bool operator==(const TokenizedDoc&, const TokenizedDoc&) = default;
};

// Bundles the resources preprocess() needs.
struct Pipeline {
  StopwordPolicy stopwords;
  LemmaDictionary lemmas;
  PreprocessOptions options;

  TokenizedDoc operator()(const corpus::TweetRecord& record) const;
  std::vector<TokenizedDoc> operator()(const corpus::Corpus& corpus) const;
};

// strip_urls -> tokenize -> remove_stopwords -> stem or lemmatize. Tokens
// whose normalized form lands in the stoplist are dropped as well.
TokenizedDoc preprocess(const corpus::TweetRecord& record,
                        const PreprocessOptions& options,
                        const StopwordPolicy& policy,
                        const LemmaDictionary& dict);

std::vector<TokenizedDoc> preprocess_all(const corpus::Corpus& corpus,
                                         const PreprocessOptions& options,
                                         const StopwordPolicy& policy,
                                         const LemmaDictionary& dict);

// Documents with the given label, in input order.
std::vector<TokenizedDoc> select_label(const std::vector<TokenizedDoc>& docs,
                                       corpus::Stance label);

}  // namespace stancecraft::textprep
