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
#include <variant>
#include <vector>

#include "stancecraft/features.hpp"
#include "stancecraft/linear_svm.hpp"
#include "stancecraft/naive_bayes.hpp"
#include "stancecraft/ngram_stats.hpp"

namespace stancecraft::classify {

enum class ClassifierKind { NaiveBayes, Svm };

std::optional<ClassifierKind> parse_classifier(std::string_view name);
std::string_view classifier_name(ClassifierKind kind);

using TrainedModel = std::variant<NBModel, SVMModel>;

// Positive favours the left class. For NB this is the log-odds, for the
// SVM the margin.
double decision_score(const TrainedModel& model, const SparseVector& x);
// The prior log-odds (NB) or the bias (SVM).
double intercept_term(const TrainedModel& model);
Stance predict(const TrainedModel& model, const SparseVector& x);

struct TrainConfig {
  ClassifierKind classifier = ClassifierKind::Svm;
  VectorizerKind vectorizer = VectorizerKind::Count;
  NgramRange range{1, 1};
  // Recorded only; documents arrive already cleaned.
  textprep::Mode cleaning = textprep::Mode::Lemma;
  double alpha = 1.0;
  SvmConfig svm;
};

// Feature space, fitted model and the per-party training feature counts
// needed to explain predictions.
struct StanceClassifier {
  TrainConfig config;
  FeatureSpace features;
  TrainedModel model;
  ngram::FrequencyTable left_counts;
  ngram::FrequencyTable right_counts;

  static StanceClassifier train(const std::vector<TokenizedDoc>& docs,
                                const TrainConfig& config);

  SparseVector vectorize(const TokenizedDoc& doc) const {
    return features.transform(doc);
  }
  double decision_score(const TokenizedDoc& doc) const;
  Stance predict(const TokenizedDoc& doc) const;
  std::vector<Stance> predict(const std::vector<TokenizedDoc>& docs) const;
};

inline constexpr int kModelFormatVersion = 1;

// Versioned JSON container: vocabulary, model kind, parameters, training
// configuration and seed. Doubles round-trip exactly.
void save_model(std::ostream& out, const StanceClassifier& classifier);
StanceClassifier load_model(std::istream& in);
void save_model(const std::filesystem::path& path,
                const StanceClassifier& classifier);
StanceClassifier load_model(const std::filesystem::path& path);

}  // namespace stancecraft::classify
