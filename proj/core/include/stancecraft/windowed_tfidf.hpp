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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stancecraft/textprep.hpp"
#include "stancecraft/timestamp.hpp"

namespace stancecraft::tfidf {

using textprep::TokenizedDoc;

struct TfidfConfig {
  std::size_t window_size = 10;
  // Score every tweet against the whole opposing corpus instead of a
  // sliding window.
  bool whole_corpus = false;

  void validate() const;
};

struct MaxTfidfRecord {
  std::string source_id;
  Timestamp timestamp{};
  std::string word;
  double score = 0.0;
  std::size_t window_index = 0;

  friend bool operator==(const MaxTfidfRecord&, const MaxTfidfRecord&) =
      default;
};

// count(word) / |doc|. Throws DomainError for an empty document.
double tf(std::string_view word, const TokenizedDoc& doc);

// ln((1 + N) / (1 + df)) + 1 over the window. Throws DomainError for an
// empty window.
double idf(std::string_view word, const std::vector<TokenizedDoc>& window);
double idf_from_counts(std::size_t window_docs, std::size_t doc_frequency);

// Highest tf*idf token of doc; ties go to the earliest first occurrence.
MaxTfidfRecord max_tfidf_word(const TokenizedDoc& doc,
                              const std::vector<TokenizedDoc>& window,
                              std::size_t window_index = 0);

// Half-open [begin, end) range of the opposing-party block used for the
// party-A tweet at `position`. Blocks are positional; once the opposing
// party runs out, its last block is reused.
struct BlockRange {
  std::size_t index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};
BlockRange opposing_block(std::size_t position, std::size_t opposing_size,
                          const TfidfConfig& cfg);

// One record per party-A tweet, in input order. Both inputs must be
// non-empty and sorted by timestamp, and every party-A tweet must carry at
// least one token.
std::vector<MaxTfidfRecord> chronological_pass(
    const std::vector<TokenizedDoc>& party_a,
    const std::vector<TokenizedDoc>& party_b, const TfidfConfig& cfg);

struct RepeatedWord {
  std::string word;
  std::size_t count = 0;
  // Sum of the winning scores; used by the score-margin distinctness mode.
  double score_sum = 0.0;
};

// Words by number of records they win, count desc then word asc.
std::vector<RepeatedWord> top_repeated(
    const std::vector<MaxTfidfRecord>& records, std::size_t k);

using CategoryMap = std::map<std::string, std::string, std::less<>>;

inline constexpr std::string_view kOtherCategory = "other";

// "word<TAB>category" lines, '#' comments allowed.
CategoryMap load_category_map(const std::filesystem::path& path);
CategoryMap parse_category_map(std::istream& in);

struct CategorizedWord {
  std::string word;
  std::string category;
};

std::vector<CategorizedWord> categorize(const std::vector<std::string>& words,
                                        const CategoryMap& categories);

enum class MarginMode { RepetitionCount, ScoreSum };

struct DistinctRepeated {
  std::string word;
  double own = 0.0;
  double other = 0.0;
  double difference = 0.0;
};

// Words of `own` whose repetition count (or summed score) exceeds the
// other party's by at least `margin`. Sorted by difference desc, word asc.
std::vector<DistinctRepeated> distinct_repeated(
    const std::vector<RepeatedWord>& own,
    const std::vector<RepeatedWord>& other, double margin = 5.0,
    MarginMode mode = MarginMode::RepetitionCount);

// CSV "source_id,timestamp,word,score,window_index".
void write_records_csv(std::ostream& out,
                       const std::vector<MaxTfidfRecord>& records);
// CSV "word,count,category".
void write_top_repeated_csv(std::ostream& out,
                            const std::vector<RepeatedWord>& words,
                            const CategoryMap& categories);

}  // namespace stancecraft::tfidf
