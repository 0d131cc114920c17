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
#include <string>
#include <vector>

#include "stancecraft/corpus_store.hpp"
#include "stancecraft/timestamp.hpp"

namespace stancecraft::app {

struct WeightedWord {
  std::string word;
  double weight = 1.0;
};

// Recipe for a labeled corpus with known ground truth.
struct SyntheticSpec {
  std::size_t n_tweets = 2000;
  double left_fraction = 0.553;
  std::vector<WeightedWord> shared_lexicon;
  // An empty party lexicon makes that party indistinguishable.
  std::vector<WeightedWord> left_lexicon;
  std::vector<WeightedWord> right_lexicon;
  std::size_t min_length = 8;
  std::size_t max_length = 16;
  std::uint64_t seed = 0;
  Timestamp start = Timestamp{std::chrono::sys_days{
      std::chrono::year{2020} / std::chrono::March / 1}};

  // Throws ConfigError for non-positive weights, a left fraction outside
  // (0, 1), an empty shared lexicon or an inverted length range.
  void validate() const;

  // 20 shared words at weight 1 and five words per party at
  // `party_weight`. A party_weight of 0 leaves the party lexicons empty.
  static SyntheticSpec standard(std::uint64_t seed, double party_weight = 4.0);
};

// Each tweet is drawn independently: the label from left_fraction, the
// length uniformly from [min_length, max_length], then tokens from the
// shared lexicon merged with the party lexicon, by weight. Timestamps are
// strictly increasing. Deterministic per seed.
corpus::Corpus generate_synthetic(const SyntheticSpec& spec);

// Writes records in the raw JSONL export schema.
void write_raw_jsonl(std::ostream& out, const corpus::Corpus& corpus);

}  // namespace stancecraft::app
