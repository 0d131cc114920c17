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

#include "stancecraft/ngram_stats.hpp"

#include <cmath>
#include <fstream>

#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::ngram {

std::string key_string(const Bigram& key) {
  return key.first + " " + key.second;
}

std::int64_t FrequencyTable::count(std::string_view token) const {
  const auto it = counts.find(token);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t BigramTable::count(const Bigram& pair) const {
  const auto it = counts.find(pair);
  return it == counts.end() ? 0 : it->second;
}

namespace {

std::optional<Stance> common_label(const std::vector<TokenizedDoc>& docs) {
  if (docs.empty()) return std::nullopt;
  const Stance label = docs.front().label;
  for (const auto& d : docs) {
    if (d.label != label) {
      throw ValidationError(
          "documents from both parties passed to a single-party table");
    }
  }
  return label;
}

}  // namespace

FrequencyTable bow_counts(const std::vector<TokenizedDoc>& docs) {
  FrequencyTable table;
  table.party = common_label(docs);
  for (const auto& d : docs) {
    for (const auto& token : d.tokens) {
      ++table.counts[token];
      ++table.total_tokens;
    }
  }
  return table;
}

BigramTable bigram_counts(const std::vector<TokenizedDoc>& docs) {
  BigramTable table;
  table.party = common_label(docs);
  for (const auto& d : docs) {
    for (std::size_t i = 0; i + 1 < d.tokens.size(); ++i) {
      ++table.counts[Bigram{d.tokens[i], d.tokens[i + 1]}];
      ++table.unigram_counts[d.tokens[i]];
    }
  }
  return table;
}

FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b) {
  if (a.party && b.party && *a.party != *b.party) {
    throw ValidationError("cannot merge tables of different parties");
  }
  FrequencyTable out = a;
  if (!out.party) out.party = b.party;
  for (const auto& [key, count] : b.counts) out.counts[key] += count;
  out.total_tokens += b.total_tokens;
  return out;
}

double bigram_prob(const BigramTable& table, std::string_view prev,
                   std::string_view next) {
  const auto it = table.unigram_counts.find(prev);
  if (it == table.unigram_counts.end() || it->second <= 0) {
    throw DomainError("P(. | '" + std::string(prev) +
                      "') is undefined: token never precedes another");
  }
  const auto pair = table.counts.find(Bigram{std::string(prev), std::string(next)});
  const std::int64_t joint = pair == table.counts.end() ? 0 : pair->second;
  return static_cast<double>(joint) / static_cast<double>(it->second);
}

std::vector<Ranked<std::string>> top_k(const FrequencyTable& table,
                                       std::size_t k) {
  return top_k(table.counts, k);
}

std::vector<Ranked<Bigram>> top_k(const BigramTable& table, std::size_t k) {
  return top_k(table.counts, k);
}

template <typename Key>
std::vector<DistinctKeyword<Key>> distinct_keywords(
    const CountMap<Key>& own, const CountMap<Key>& other,
    double ratio_threshold, std::int64_t min_difference) {
  if (!(ratio_threshold > 1.0)) {
    throw ConfigError("distinct keyword ratio threshold must exceed 1");
  }
  std::vector<DistinctKeyword<Key>> out;
  for (const auto& [key, own_count] : own) {
    if (own_count <= 0) continue;
    const auto it = other.find(key);
    const std::int64_t other_count = it == other.end() ? 0 : it->second;
    const std::int64_t difference = own_count - other_count;
    if (difference < min_difference) continue;
    double ratio = std::numeric_limits<double>::infinity();
    if (other_count > 0) {
      ratio = static_cast<double>(own_count) / static_cast<double>(other_count);
      if (ratio < ratio_threshold) continue;
    }
    out.push_back({key, own_count, other_count, difference, ratio});
  }
  std::sort(out.begin(), out.end(),
            [](const DistinctKeyword<Key>& a, const DistinctKeyword<Key>& b) {
              if (a.difference != b.difference) {
                return a.difference > b.difference;
              }
              return a.key < b.key;
            });
  return out;
}

template std::vector<DistinctKeyword<std::string>> distinct_keywords(
    const CountMap<std::string>&, const CountMap<std::string>&, double,
    std::int64_t);
template std::vector<DistinctKeyword<Bigram>> distinct_keywords(
    const CountMap<Bigram>&, const CountMap<Bigram>&, double, std::int64_t);

std::vector<DistinctKeyword<std::string>> distinct_keywords(
    const FrequencyTable& own, const FrequencyTable& other,
    double ratio_threshold, std::int64_t min_difference) {
  return distinct_keywords(own.counts, other.counts, ratio_threshold,
                           min_difference);
}

std::vector<DistinctKeyword<Bigram>> distinct_keywords(
    const BigramTable& own, const BigramTable& other, double ratio_threshold,
    std::int64_t min_difference) {
  return distinct_keywords(own.counts, other.counts, ratio_threshold,
                           min_difference);
}

std::vector<MatchedKey<std::string>> matched_comparison(
    const FrequencyTable& a, const FrequencyTable& b, std::size_t k) {
  return matched_comparison(a.counts, b.counts, k);
}

std::vector<MatchedKey<Bigram>> matched_comparison(const BigramTable& a,
                                                   const BigramTable& b,
                                                   std::size_t k) {
  return matched_comparison(a.counts, b.counts, k);
}

KeywordFilterRules KeywordFilterRules::load(const std::filesystem::path& dir,
                                            bool keep_names) {
  KeywordFilterRules rules;
  rules.keep_names = keep_names;
  for (const char* list : {"states", "nonenglish", "acronyms"}) {
    const auto path = dir / (std::string(list) + ".txt");
    auto& entries = rules.drop_lists[list];
    for (auto& word : read_word_list(path.string())) {
      entries.insert(to_lower_ascii(word));
    }
  }
  for (auto& word : read_word_list((dir / "names.txt").string())) {
    rules.names.insert(to_lower_ascii(word));
  }
  return rules;
}

bool KeywordFilterRules::drops(std::string_view key) const {
  auto listed = [&](std::string_view word) {
    for (const auto& [name, entries] : drop_lists) {
      if (entries.contains(word)) return true;
    }
    return !keep_names && names.contains(word);
  };
  if (listed(key)) return true;
  const auto words = split_words(key);
  if (words.size() < 2) return false;
  for (const auto& w : words) {
    if (listed(w)) return true;
  }
  return false;
}

std::vector<std::string> apply_keyword_filters(
    const std::vector<std::string>& keys, const KeywordFilterRules& rules) {
  std::vector<std::string> kept;
  for (const auto& k : keys) {
    if (!rules.drops(k)) kept.push_back(k);
  }
  return kept;
}

namespace {

template <typename Key>
void write_counts(std::ostream& out, const CountMap<Key>& counts) {
  csv::write_row(out, {"key", "count"});
  for (const auto& r : top_k(counts, counts.size())) {
    csv::write_row(out, {key_string(r.key), std::to_string(r.count)});
  }
}

}  // namespace

void write_table_csv(std::ostream& out, const FrequencyTable& table) {
  write_counts(out, table.counts);
}

void write_table_csv(std::ostream& out, const BigramTable& table) {
  write_counts(out, table.counts);
}

CountMap<std::string> read_table_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || header->fields.size() < 2 || header->fields[0] != "key" ||
      header->fields[1] != "count") {
    throw SchemaError("table CSV must start with a key,count header");
  }
  CountMap<std::string> counts;
  while (auto row = reader.next()) {
    if (row->fields.size() == 1 && row->fields[0].empty()) continue;
    if (row->fields.size() < 2) {
      throw SchemaError("table CSV line " + std::to_string(row->line) +
                        " has fewer than two fields");
    }
    try {
      counts[row->fields[0]] += std::stoll(row->fields[1]);
    } catch (const std::exception&) {
      throw SchemaError("table CSV line " + std::to_string(row->line) +
                        ": count is not an integer");
    }
  }
  return counts;
}

}  // namespace stancecraft::ngram
