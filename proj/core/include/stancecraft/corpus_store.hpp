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
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "stancecraft/timestamp.hpp"

namespace stancecraft::corpus {

enum class Party { D, R, NPP };

std::optional<Party> parse_party(std::string_view code);
std::string_view party_code(Party party);

// +1 is left-leaning, -1 is right-leaning.
enum class Stance : int { Left = 1, Right = -1 };

constexpr int stance_value(Stance s) { return static_cast<int>(s); }
// Throws DomainError for anything other than +1 / -1.
Stance stance_from_value(int value);

// Democrats and the New Progressive Party are left, Republicans right.
constexpr Stance assign_label(Party party) {
  return party == Party::R ? Stance::Right : Stance::Left;
}

struct TweetRecord {
  std::string id;
  Timestamp timestamp;
  std::string username;
  Party party = Party::D;
  std::string state;
  std::string text;

  Stance label() const { return assign_label(party); }

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct Corpus {
  std::vector<TweetRecord> records;
  std::string provenance;
  std::optional<std::vector<std::string>> filter_terms_applied;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class Format { Jsonl, Csv };

std::optional<Format> parse_format(std::string_view name);

struct Reject {
  std::size_t line = 0;
  std::string reason;
};

struct IngestResult {
  Corpus corpus;
  std::vector<Reject> rejects;
};

struct IngestOptions {
  // Inclusive bounds; records outside go to the rejects report.
  std::optional<Timestamp> from;
  std::optional<Timestamp> to;
  std::string provenance;
};

// Reads tweet records in file order. Malformed rows, invalid UTF-8,
// unknown party codes and out-of-range dates are collected in the rejects
// report. A duplicate id throws ValidationError.
IngestResult ingest(std::istream& source, Format format,
                    const IngestOptions& options = {});

const std::vector<std::string>& default_covid_terms();

// Keeps records whose lowercased text contains any term as a substring.
// Throws ConfigError when terms is empty.
Corpus filter_covid(const Corpus& corpus,
                    const std::vector<std::string>& terms);

struct SplitSpec {
  double dev_fraction = 0.10;
  double train_fraction = 0.80;
  double test_fraction = 0.10;
  std::uint64_t seed = 0;
  // In strict mode a corpus with fewer than three records is rejected.
  bool strict = true;

  // Throws ConfigError when a fraction is negative or the sum is not 1.
  void validate() const;
};

struct SplitResult {
  Corpus dev;
  Corpus train;
  Corpus test;
};

// Seeded Fisher-Yates shuffle, then dev = first floor(dev * n), test =
// last floor(test * n), train = the remainder.
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

// Sizes (dev, train, test) that split() produces for n records.
std::tuple<std::size_t, std::size_t, std::size_t> split_sizes(
    std::size_t n, const SplitSpec& spec);

struct ClassDistribution {
  std::size_t left = 0;
  std::size_t right = 0;
  // Percentages rounded to one decimal place.
  double left_percent = 0.0;
  double right_percent = 0.0;

  std::size_t total() const { return left + right; }
};

ClassDistribution distribution_from_counts(std::size_t left,
                                           std::size_t right);
ClassDistribution class_distribution(const Corpus& corpus);

inline constexpr int kSchemaVersion = 1;

// Header line {"schema":1,"provenance":...,"filter_terms":[...],
// "records":n} followed by one JSONL record per line.
void write_corpus(std::ostream& out, const Corpus& corpus);
Corpus read_corpus(std::istream& in);

void persist(const Corpus& corpus, const std::filesystem::path& path);
Corpus load(const std::filesystem::path& path);

// Loads either a persisted corpus (detected by its schema header) or a raw
// JSONL/CSV export (by extension). Raw rejects are returned alongside.
IngestResult load_any(const std::filesystem::path& path);

}  // namespace stancecraft::corpus
