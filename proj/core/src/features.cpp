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

#include "stancecraft/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "stancecraft/error.hpp"

namespace stancecraft::classify {

void NgramRange::validate() const {
  const bool ok = (min_n == 1 && max_n == 1) || (min_n == 1 && max_n == 2) ||
                  (min_n == 2 && max_n == 2);
  if (!ok) {
    throw ConfigError("n-gram range must be (1,1), (1,2) or (2,2)");
  }
}

std::optional<NgramRange> parse_ngram_range(std::string_view name) {
  if (name == "unigram" || name == "bow" || name == "1" || name == "1,1") {
    return NgramRange{1, 1};
  }
  if (name == "unigram+bigram" || name == "1,2" || name == "12") {
    return NgramRange{1, 2};
  }
  if (name == "bigram" || name == "2" || name == "2,2") return NgramRange{2, 2};
  return std::nullopt;
}

std::string ngram_range_name(NgramRange range) {
  if (range.min_n == 1 && range.max_n == 1) return "unigram";
  if (range.min_n == 1 && range.max_n == 2) return "unigram+bigram";
  return "bigram";
}

std::vector<std::string> extract_features(
    const std::vector<std::string>& tokens, NgramRange range) {
  std::vector<std::string> features;
  if (range.min_n <= 1) features = tokens;
  if (range.max_n >= 2) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      features.push_back(tokens[i] + " " + tokens[i + 1]);
    }
  }
  return features;
}

Vocabulary Vocabulary::build(const std::vector<TokenizedDoc>& docs,
                             NgramRange range, std::string built_from) {
  range.validate();
  if (docs.empty()) throw DomainError("cannot build a vocabulary from no documents");
  Vocabulary vocab;
  vocab.range_ = range;
  vocab.built_from_ = std::move(built_from);
  for (const auto& d : docs) {
    for (auto& f : extract_features(d.tokens, range)) {
      if (vocab.index_.contains(f)) continue;
      vocab.index_.emplace(f, static_cast<std::uint32_t>(vocab.terms_.size()));
      vocab.terms_.push_back(std::move(f));
    }
  }
  return vocab;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms,
                                  NgramRange range, std::string built_from) {
  range.validate();
  Vocabulary vocab;
  vocab.range_ = range;
  vocab.built_from_ = std::move(built_from);
  vocab.terms_ = std::move(terms);
  for (std::size_t i = 0; i < vocab.terms_.size(); ++i) {
    if (!vocab.index_.emplace(vocab.terms_[i], static_cast<std::uint32_t>(i))
             .second) {
      throw SchemaError("duplicate vocabulary term '" + vocab.terms_[i] + "'");
    }
  }
  return vocab;
}

std::optional<std::uint32_t> Vocabulary::index_of(
    std::string_view feature) const {
  const auto it = index_.find(std::string(feature));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double SparseVector::dot(std::span<const double> dense) const {
  double sum = 0.0;
  for (const auto& [col, v] : entries) sum += v * dense[col];
  return sum;
}

double SparseVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& [col, v] : entries) sum += v * v;
  return sum;
}

double SparseVector::sum() const {
  double total = 0.0;
  for (const auto& [col, v] : entries) total += v;
  return total;
}

std::optional<double> SparseVector::value(std::uint32_t column) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), column,
      [](const auto& entry, std::uint32_t c) { return entry.first < c; });
  if (it == entries.end() || it->first != column) return std::nullopt;
  return it->second;
}

SparseVector count_vectorize(const TokenizedDoc& doc, const Vocabulary& vocab) {
  std::map<std::uint32_t, double> counts;
  for (const auto& f : extract_features(doc.tokens, vocab.range())) {
    if (const auto id = vocab.index_of(f)) counts[*id] += 1.0;
  }
  SparseVector v;
  v.dimension = vocab.size();
  v.entries.assign(counts.begin(), counts.end());
  return v;
}

std::vector<double> fit_idf(const std::vector<TokenizedDoc>& train_docs,
                            const Vocabulary& vocab) {
  std::vector<std::size_t> df(vocab.size(), 0);
  for (const auto& d : train_docs) {
    std::unordered_set<std::uint32_t> seen;
    for (const auto& f : extract_features(d.tokens, vocab.range())) {
      if (const auto id = vocab.index_of(f); id && seen.insert(*id).second) {
        ++df[*id];
      }
    }
  }
  const double n = static_cast<double>(train_docs.size());
  std::vector<double> idf(vocab.size());
  for (std::size_t j = 0; j < idf.size(); ++j) {
    idf[j] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[j]))) + 1.0;
  }
  return idf;
}

SparseVector tfidf_transform(const TokenizedDoc& doc, const Vocabulary& vocab,
                             std::span<const double> idf) {
  if (idf.size() != vocab.size()) {
    throw DomainError("idf vector does not match the vocabulary");
  }
  SparseVector v = count_vectorize(doc, vocab);
  for (auto& [col, value] : v.entries) value *= idf[col];
  const double norm = std::sqrt(v.squared_norm());
  if (norm > 0.0) {
    for (auto& [col, value] : v.entries) value /= norm;
  }
  return v;
}

TfidfFit tfidf_vectorize(const std::vector<TokenizedDoc>& train_docs,
                         const Vocabulary& vocab) {
  TfidfFit fit;
  fit.idf = fit_idf(train_docs, vocab);
  fit.matrix.reserve(train_docs.size());
  for (const auto& d : train_docs) {
    fit.matrix.push_back(tfidf_transform(d, vocab, fit.idf));
  }
  return fit;
}

std::optional<VectorizerKind> parse_vectorizer(std::string_view name) {
  if (name == "count") return VectorizerKind::Count;
  if (name == "tfidf") return VectorizerKind::Tfidf;
  return std::nullopt;
}

std::string_view vectorizer_name(VectorizerKind kind) {
  return kind == VectorizerKind::Count ? "count" : "tfidf";
}

FeatureSpace FeatureSpace::fit(const std::vector<TokenizedDoc>& train_docs,
                               NgramRange range, VectorizerKind kind) {
  FeatureSpace space;
  space.vocab = Vocabulary::build(train_docs, range);
  space.kind = kind;
  if (kind == VectorizerKind::Tfidf) space.idf = fit_idf(train_docs, space.vocab);
  return space;
}

SparseVector FeatureSpace::transform(const TokenizedDoc& doc) const {
  return kind == VectorizerKind::Count ? count_vectorize(doc, vocab)
                                       : tfidf_transform(doc, vocab, idf);
}

Matrix FeatureSpace::transform(const std::vector<TokenizedDoc>& docs) const {
  Matrix m;
  m.reserve(docs.size());
  for (const auto& d : docs) m.push_back(transform(d));
  return m;
}

ngram::FrequencyTable feature_counts(const std::vector<TokenizedDoc>& docs,
                                     NgramRange range, Stance label) {
  ngram::FrequencyTable table;
  table.party = label;
  for (const auto& d : docs) {
    if (d.label != label) continue;
    for (auto& f : extract_features(d.tokens, range)) {
      ++table.counts[f];
      ++table.total_tokens;
    }
  }
  return table;
}

std::vector<Stance> labels_of(const std::vector<TokenizedDoc>& docs) {
  std::vector<Stance> labels;
  labels.reserve(docs.size());
  for (const auto& d : docs) labels.push_back(d.label);
  return labels;
}

}  // namespace stancecraft::classify
