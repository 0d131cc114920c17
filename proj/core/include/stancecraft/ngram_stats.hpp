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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stancecraft/corpus_store.hpp"
#include "stancecraft/textprep.hpp"

namespace stancecraft::ngram {

using corpus::Stance;
using textprep::TokenizedDoc;

using Bigram = std::pair<std::string, std::string>;

// "w1 w2" for bigrams, the token itself for unigrams.
inline const std::string& key_string(const std::string& key) { return key; }
std::string key_string(const Bigram& key);

template <typename Key>
using CountMap = std::map<Key, std::int64_t, std::less<>>;

struct FrequencyTable {
  // Unset only for a table built from no documents.
  std::optional<Stance> party;
  CountMap<std::string> counts;
  std::int64_t total_tokens = 0;

  std::int64_t count(std::string_view token) const;
  friend bool operator==(const FrequencyTable&, const FrequencyTable&) =
      default;
};

struct BigramTable {
  std::optional<Stance> party;
  CountMap<Bigram> counts;
  // Occurrences of each token as the left element of a pair. Tokens that
  // only ever end a document are absent, so conditionals normalize to 1.
  CountMap<std::string> unigram_counts;

  std::int64_t count(const Bigram& pair) const;
};

// Throws ValidationError when the documents do not share one label.
FrequencyTable bow_counts(const std::vector<TokenizedDoc>& docs);
BigramTable bigram_counts(const std::vector<TokenizedDoc>& docs);

// Count-wise sum. Throws ValidationError on a party mismatch.
FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b);

// P(next | prev) = counts[(prev, next)] / unigram_counts[prev]. Throws
// DomainError when prev never opens a pair.
double bigram_prob(const BigramTable& table, std::string_view prev,
                   std::string_view next);

template <typename Key>
struct Ranked {
  Key key;
  std::int64_t count = 0;
  friend bool operator==(const Ranked&, const Ranked&) = default;
};

// The k highest counts, ordered by (count desc, key asc).
template <typename Key>
std::vector<Ranked<Key>> top_k(const CountMap<Key>& counts, std::size_t k) {
  std::vector<Ranked<Key>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [key, count] : counts) ranked.push_back({key, count});
  auto by_rank = [](const Ranked<Key>& a, const Ranked<Key>& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.key < b.key;
  };
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    by_rank);
  ranked.resize(keep);
  return ranked;
}

std::vector<Ranked<std::string>> top_k(const FrequencyTable& table,
                                       std::size_t k);
std::vector<Ranked<Bigram>> top_k(const BigramTable& table, std::size_t k);

template <typename Key>
struct DistinctKeyword {
  Key key;
  std::int64_t own_count = 0;
  std::int64_t other_count = 0;
  std::int64_t difference = 0;
  // +infinity when the key never occurs in the other table.
  double ratio = 0.0;
};

// Keys of `own` that are at least ratio_threshold times more frequent
// than in `other` (or absent from it) and whose difference reaches
// min_difference. Sorted by difference desc, then key asc. Throws
// ConfigError unless ratio_threshold > 1.
template <typename Key>
std::vector<DistinctKeyword<Key>> distinct_keywords(
    const CountMap<Key>& own, const CountMap<Key>& other,
    double ratio_threshold, std::int64_t min_difference = 0);

std::vector<DistinctKeyword<std::string>> distinct_keywords(
    const FrequencyTable& own, const FrequencyTable& other,
    double ratio_threshold, std::int64_t min_difference = 0);
std::vector<DistinctKeyword<Bigram>> distinct_keywords(
    const BigramTable& own, const BigramTable& other, double ratio_threshold,
    std::int64_t min_difference = 0);

template <typename Key>
struct MatchedKey {
  Key key;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
};

// Keys present in both top-k lists, in the rank order of table A.
template <typename Key>
std::vector<MatchedKey<Key>> matched_comparison(const CountMap<Key>& a,
                                                const CountMap<Key>& b,
                                                std::size_t k) {
  const auto top_a = top_k(a, k);
  const auto top_b = top_k(b, k);
  std::map<Key, std::int64_t, std::less<>> b_counts;
  for (const auto& r : top_b) b_counts.emplace(r.key, r.count);
  std::vector<MatchedKey<Key>> out;
  for (const auto& r : top_a) {
    if (auto it = b_counts.find(r.key); it != b_counts.end()) {
      out.push_back({r.key, r.count, it->second});
    }
  }
  return out;
}

std::vector<MatchedKey<std::string>> matched_comparison(
    const FrequencyTable& a, const FrequencyTable& b, std::size_t k);
std::vector<MatchedKey<Bigram>> matched_comparison(const BigramTable& a,
                                                   const BigramTable& b,
                                                   std::size_t k);

// Automates the keyword-rating criteria: area/state names, non-English
// words, invalid words and opaque acronyms are dropped; person names are
// dropped only when keep_names is false.
struct KeywordFilterRules {
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>>
      drop_lists;
  std::set<std::string, std::less<>> names;
  bool keep_names = true;

  // Reads states.txt, names.txt, nonenglish.txt and acronyms.txt from dir.
  // Throws ConfigError when any of them is missing.
  static KeywordFilterRules load(const std::filesystem::path& dir,
                                 bool keep_names = true);

  // A key is dropped when the whole key, or any of its words, is listed.
  bool drops(std::string_view key) const;
};

std::vector<std::string> apply_keyword_filters(
    const std::vector<std::string>& keys, const KeywordFilterRules& rules);

template <typename Key>
std::vector<DistinctKeyword<Key>> apply_keyword_filters(
    const std::vector<DistinctKeyword<Key>>& keys,
    const KeywordFilterRules& rules) {
  std::vector<DistinctKeyword<Key>> kept;
  for (const auto& k : keys) {
    if (!rules.drops(key_string(k.key))) kept.push_back(k);
  }
  return kept;
}

// CSV "key,count", rows in (count desc, key asc) order.
void write_table_csv(std::ostream& out, const FrequencyTable& table);
void write_table_csv(std::ostream& out, const BigramTable& table);
// Reads "key,count" rows back into a table keyed by the key string.
CountMap<std::string> read_table_csv(std::istream& in);

}  // namespace stancecraft::ngram
