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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stancecraft/ngram_stats.hpp"
#include "stancecraft/textprep.hpp"

namespace stancecraft::classify {

using corpus::Stance;
using textprep::TokenizedDoc;

// (1,1) unigrams, (1,2) unigrams plus bigrams, (2,2) bigrams only.
struct NgramRange {
  int min_n = 1;
  int max_n = 1;

  void validate() const;
  friend bool operator==(const NgramRange&, const NgramRange&) = default;
};

std::optional<NgramRange> parse_ngram_range(std::string_view name);
// "unigram", "unigram+bigram" or "bigram".
std::string ngram_range_name(NgramRange range);

// Feature strings of a token sequence in document order: all unigrams,
// then all adjacent pairs as "w1 w2".
std::vector<std::string> extract_features(
    const std::vector<std::string>& tokens, NgramRange range);

class Vocabulary {
 public:
  Vocabulary() = default;

  // Feature strings of the training docs indexed in first-seen order.
  // Throws DomainError for an empty document list.
  static Vocabulary build(const std::vector<TokenizedDoc>& docs,
                          NgramRange range, std::string built_from = "train");
  static Vocabulary from_terms(std::vector<std::string> terms,
                               NgramRange range, std::string built_from);

  std::size_t size() const { return terms_.size(); }
  NgramRange range() const { return range_; }
  const std::string& built_from() const { return built_from_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::size_t id) const { return terms_.at(id); }
  std::optional<std::uint32_t> index_of(std::string_view feature) const;

 private:
  NgramRange range_;
  std::string built_from_;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Sparse row: entries sorted by column, no stored zeros.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::size_t dimension = 0;

  double dot(std::span<const double> dense) const;
  double squared_norm() const;
  double sum() const;
  bool empty() const { return entries.empty(); }
  std::optional<double> value(std::uint32_t column) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

using Matrix = std::vector<SparseVector>;

// Raw occurrence counts of in-vocabulary features; OOV features ignored.
SparseVector count_vectorize(const TokenizedDoc& doc, const Vocabulary& vocab);

struct TfidfFit {
  Matrix matrix;
  std::vector<double> idf;
};

// idf_j = ln((1 + N) / (1 + df_j)) + 1 over the training documents.
std::vector<double> fit_idf(const std::vector<TokenizedDoc>& train_docs,
                            const Vocabulary& vocab);

// count * idf, then scaled to unit Euclidean norm (zero stays zero).
SparseVector tfidf_transform(const TokenizedDoc& doc, const Vocabulary& vocab,
                             std::span<const double> idf);

TfidfFit tfidf_vectorize(const std::vector<TokenizedDoc>& train_docs,
                         const Vocabulary& vocab);

enum class VectorizerKind { Count, Tfidf };

std::optional<VectorizerKind> parse_vectorizer(std::string_view name);
std::string_view vectorizer_name(VectorizerKind kind);

// A fitted vocabulary plus, for TF-IDF, its idf vector.
struct FeatureSpace {
  Vocabulary vocab;
  VectorizerKind kind = VectorizerKind::Count;
  std::vector<double> idf;

  static FeatureSpace fit(const std::vector<TokenizedDoc>& train_docs,
                          NgramRange range, VectorizerKind kind);

  std::size_t dimension() const { return vocab.size(); }
  SparseVector transform(const TokenizedDoc& doc) const;
  Matrix transform(const std::vector<TokenizedDoc>& docs) const;
};

// Per-party feature frequencies (bigram features included) for the
// documents carrying `label`.
ngram::FrequencyTable feature_counts(const std::vector<TokenizedDoc>& docs,
                                     NgramRange range, Stance label);

std::vector<Stance> labels_of(const std::vector<TokenizedDoc>& docs);

}  // namespace stancecraft::classify
