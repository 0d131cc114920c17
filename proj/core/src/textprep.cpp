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

#include "stancecraft/textprep.hpp"

#include <array>

#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::textprep {
namespace {

bool starts_with_icase(std::string_view text, std::size_t pos,
                       std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = text[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

bool url_starts_at(std::string_view text, std::size_t pos) {
  static constexpr std::array<std::string_view, 3> kPrefixes{
      "http://", "https://", "www."};
  for (auto prefix : kPrefixes) {
    if (starts_with_icase(text, pos, prefix)) return true;
  }
  return false;
}

}  // namespace

std::string strip_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (url_starts_at(text, i)) {
      while (i < text.size() && !is_ascii_space(text[i])) ++i;
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

StopwordPolicy StopwordPolicy::from_file(const std::filesystem::path& stoplist) {
  StopwordPolicy policy;
  for (auto& word : read_word_list(stoplist.string())) {
    policy.base_list.insert(to_lower_ascii(word));
  }
  return policy;
}

bool StopwordPolicy::is_stopword(std::string_view token) const {
  if (negation_exceptions.contains(token)) return false;
  return base_list.contains(token) || custom_additions.contains(token);
}

std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens, const StopwordPolicy& policy) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (policy.negation_exceptions.contains(token)) {
      kept.push_back(token);
      continue;
    }
    if (is_punctuation_token(token) || policy.is_stopword(token)) continue;
    kept.push_back(token);
  }
  return kept;
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "stem") return Mode::Stem;
  if (name == "lemma") return Mode::Lemma;
  return std::nullopt;
}

std::string_view mode_name(Mode mode) {
  return mode == Mode::Stem ? "stem" : "lemma";
}

TokenizedDoc preprocess(const corpus::TweetRecord& record,
                        const PreprocessOptions& options,
                        const StopwordPolicy& policy,
                        const LemmaDictionary& dict) {
  TokenizedDoc doc;
  doc.label = record.label();
  doc.timestamp = record.timestamp;
  doc.source_id = record.id;

  const auto tokens = remove_stopwords(tokenize(strip_urls(record.text)), policy);
  doc.tokens.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (options.drop_hashtags && token.size() > 1 && token.front() == '#') {
      continue;
    }
    std::string normalized = options.mode == Mode::Stem
                                 ? porter_stem(token)
                                 : dict.lemmatize(token);
    if (normalized.empty() || policy.is_stopword(normalized)) continue;
    doc.tokens.push_back(std::move(normalized));
  }
  return doc;
}

std::vector<TokenizedDoc> preprocess_all(const corpus::Corpus& corpus,
                                         const PreprocessOptions& options,
                                         const StopwordPolicy& policy,
                                         const LemmaDictionary& dict) {
  std::vector<TokenizedDoc> docs;
  docs.reserve(corpus.size());
  for (const auto& record : corpus.records) {
    docs.push_back(preprocess(record, options, policy, dict));
  }
  return docs;
}

TokenizedDoc Pipeline::operator()(const corpus::TweetRecord& record) const {
  return preprocess(record, options, stopwords, lemmas);
}

std::vector<TokenizedDoc> Pipeline::operator()(
    const corpus::Corpus& corpus) const {
  return preprocess_all(corpus, options, stopwords, lemmas);
}

std::vector<TokenizedDoc> select_label(const std::vector<TokenizedDoc>& docs,
                                       corpus::Stance label) {
  std::vector<TokenizedDoc> out;
  for (const auto& d : docs) {
    if (d.label == label) out.push_back(d);
  }
  return out;
}

}  // namespace stancecraft::textprep
