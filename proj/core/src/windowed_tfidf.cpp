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

#include "stancecraft/windowed_tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::tfidf {

void TfidfConfig::validate() const {
  if (!whole_corpus && window_size < 1) {
    throw ConfigError("TF-IDF window size must be at least 1");
  }
}

double tf(std::string_view word, const TokenizedDoc& doc) {
  if (doc.tokens.empty()) {
    throw DomainError("term frequency of an empty document");
  }
  const auto n = std::count(doc.tokens.begin(), doc.tokens.end(), word);
  return static_cast<double>(n) / static_cast<double>(doc.tokens.size());
}

double idf_from_counts(std::size_t window_docs, std::size_t doc_frequency) {
  return std::log((1.0 + static_cast<double>(window_docs)) /
                  (1.0 + static_cast<double>(doc_frequency))) +
         1.0;
}

double idf(std::string_view word, const std::vector<TokenizedDoc>& window) {
  if (window.empty()) throw DomainError("inverse document frequency over an empty window");
  std::size_t df = 0;
  for (const auto& d : window) {
    if (std::find(d.tokens.begin(), d.tokens.end(), word) != d.tokens.end()) {
      ++df;
    }
  }
  return idf_from_counts(window.size(), df);
}

namespace {

using DocFrequency = std::unordered_map<std::string, std::size_t>;

DocFrequency document_frequency(const TokenizedDoc* begin,
                                const TokenizedDoc* end) {
  DocFrequency df;
  for (const TokenizedDoc* d = begin; d != end; ++d) {
    std::unordered_set<std::string_view> seen;
    for (const auto& token : d->tokens) {
      if (seen.insert(token).second) ++df[token];
    }
  }
  return df;
}

MaxTfidfRecord best_word(const TokenizedDoc& doc, std::size_t window_docs,
                         const DocFrequency& df, std::size_t window_index) {
  if (doc.tokens.empty()) {
    throw DomainError("max TF-IDF word of empty document '" + doc.source_id +
                      "'");
  }
  if (window_docs == 0) throw DomainError("max TF-IDF word against an empty window");
  // Distinct tokens with their counts, in first-occurrence order.
  std::vector<std::pair<std::string_view, std::size_t>> distinct;
  std::unordered_map<std::string_view, std::size_t> slot;
  for (const auto& token : doc.tokens) {
    const auto [it, fresh] = slot.emplace(token, distinct.size());
    if (fresh) {
      distinct.emplace_back(token, 1);
    } else {
      ++distinct[it->second].second;
    }
  }
  MaxTfidfRecord best;
  best.source_id = doc.source_id;
  best.timestamp = doc.timestamp;
  best.window_index = window_index;
  bool have = false;
  const double length = static_cast<double>(doc.tokens.size());
  for (const auto& [token, count] : distinct) {
    const auto it = df.find(std::string(token));
    const std::size_t freq = it == df.end() ? 0 : it->second;
    const double score = (static_cast<double>(count) / length) *
                         idf_from_counts(window_docs, freq);
    if (!have || score > best.score) {
      best.word = std::string(token);
      best.score = score;
      have = true;
    }
  }
  return best;
}

}  // namespace

MaxTfidfRecord max_tfidf_word(const TokenizedDoc& doc,
                              const std::vector<TokenizedDoc>& window,
                              std::size_t window_index) {
  const auto df = document_frequency(window.data(), window.data() + window.size());
  return best_word(doc, window.size(), df, window_index);
}

BlockRange opposing_block(std::size_t position, std::size_t opposing_size,
                          const TfidfConfig& cfg) {
  if (opposing_size == 0) throw DomainError("opposing party has no tweets");
  if (cfg.whole_corpus) return {0, 0, opposing_size};
  const std::size_t w = cfg.window_size;
  const std::size_t last = (opposing_size - 1) / w;
  const std::size_t index = std::min(position / w, last);
  return {index, index * w, std::min((index + 1) * w, opposing_size)};
}

std::vector<MaxTfidfRecord> chronological_pass(
    const std::vector<TokenizedDoc>& party_a,
    const std::vector<TokenizedDoc>& party_b, const TfidfConfig& cfg) {
  cfg.validate();
  if (party_a.empty() || party_b.empty()) {
    throw DomainError("chronological TF-IDF pass needs tweets from both parties");
  }
  auto sorted = [](const std::vector<TokenizedDoc>& docs) {
    return std::is_sorted(docs.begin(), docs.end(),
                          [](const TokenizedDoc& a, const TokenizedDoc& b) {
                            return a.timestamp < b.timestamp;
                          });
  };
  if (!sorted(party_a) || !sorted(party_b)) {
    throw DomainError("chronological TF-IDF pass needs timestamp-sorted input");
  }

  std::vector<MaxTfidfRecord> records;
  records.reserve(party_a.size());
  std::size_t cached_index = SIZE_MAX;
  DocFrequency df;
  BlockRange block;
  for (std::size_t i = 0; i < party_a.size(); ++i) {
    const BlockRange current = opposing_block(i, party_b.size(), cfg);
    if (current.index != cached_index || records.empty()) {
      block = current;
      cached_index = current.index;
      df = document_frequency(party_b.data() + block.begin,
                              party_b.data() + block.end);
    }
    records.push_back(
        best_word(party_a[i], block.end - block.begin, df, block.index));
  }
  return records;
}

std::vector<RepeatedWord> top_repeated(
    const std::vector<MaxTfidfRecord>& records, std::size_t k) {
  std::map<std::string, RepeatedWord, std::less<>> tally;
  for (const auto& r : records) {
    auto& entry = tally[r.word];
    entry.word = r.word;
    ++entry.count;
    entry.score_sum += r.score;
  }
  std::vector<RepeatedWord> ranked;
  ranked.reserve(tally.size());
  for (auto& [word, entry] : tally) ranked.push_back(std::move(entry));
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RepeatedWord& a, const RepeatedWord& b) {
                     if (a.count != b.count) return a.count > b.count;
                     return a.word < b.word;
                   });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

CategoryMap parse_category_map(std::istream& in) {
  CategoryMap map;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    const auto fields = split_on(line, '\t');
    if (fields.size() != 2 || trim(fields[0]).empty() ||
        trim(fields[1]).empty()) {
      throw ConfigError("category map line " + std::to_string(line_no) +
                        ": expected word<TAB>category");
    }
    map[std::string(trim(fields[0]))] = std::string(trim(fields[1]));
  }
  return map;
}

CategoryMap load_category_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open category map " + path.string());
  return parse_category_map(in);
}

std::vector<CategorizedWord> categorize(const std::vector<std::string>& words,
                                        const CategoryMap& categories) {
  std::vector<CategorizedWord> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    const auto it = categories.find(w);
    out.push_back({w, it == categories.end() ? std::string(kOtherCategory)
                                             : it->second});
  }
  return out;
}

std::vector<DistinctRepeated> distinct_repeated(
    const std::vector<RepeatedWord>& own,
    const std::vector<RepeatedWord>& other, double margin, MarginMode mode) {
  auto value = [mode](const RepeatedWord& w) {
    return mode == MarginMode::RepetitionCount ? static_cast<double>(w.count)
                                               : w.score_sum;
  };
  std::map<std::string_view, double> other_values;
  for (const auto& w : other) other_values[w.word] = value(w);
  std::vector<DistinctRepeated> out;
  for (const auto& w : own) {
    const auto it = other_values.find(w.word);
    const double theirs = it == other_values.end() ? 0.0 : it->second;
    const double mine = value(w);
    if (mine - theirs >= margin) out.push_back({w.word, mine, theirs, mine - theirs});
  }
  std::sort(out.begin(), out.end(),
            [](const DistinctRepeated& a, const DistinctRepeated& b) {
              if (a.difference != b.difference) return a.difference > b.difference;
              return a.word < b.word;
            });
  return out;
}

void write_records_csv(std::ostream& out,
                       const std::vector<MaxTfidfRecord>& records) {
  csv::write_row(out, {"source_id", "timestamp", "word", "score", "window_index"});
  for (const auto& r : records) {
    csv::write_row(out, {r.source_id, format_iso8601(r.timestamp), r.word,
                         format_double(r.score), std::to_string(r.window_index)});
  }
}

void write_top_repeated_csv(std::ostream& out,
                            const std::vector<RepeatedWord>& words,
                            const CategoryMap& categories) {
  csv::write_row(out, {"word", "count", "category"});
  for (const auto& w : words) {
    const auto it = categories.find(w.word);
    csv::write_row(out, {w.word, std::to_string(w.count),
                         it == categories.end() ? std::string(kOtherCategory)
                                                : it->second});
  }
}

}  // namespace stancecraft::tfidf
