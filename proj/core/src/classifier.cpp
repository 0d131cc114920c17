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

#include "stancecraft/classifier.hpp"

#include "stancecraft/error.hpp"

namespace stancecraft::classify {

std::optional<ClassifierKind> parse_classifier(std::string_view name) {
  if (name == "nb" || name == "multinb") return ClassifierKind::NaiveBayes;
  if (name == "svm" || name == "linearsvc") return ClassifierKind::Svm;
  return std::nullopt;
}

std::string_view classifier_name(ClassifierKind kind) {
  return kind == ClassifierKind::NaiveBayes ? "nb" : "svm";
}

double decision_score(const TrainedModel& model, const SparseVector& x) {
  if (const auto* nb = std::get_if<NBModel>(&model)) {
    return nb_decision_score(*nb, x);
  }
  return predict_svm(std::get<SVMModel>(model), x).margin;
}

double intercept_term(const TrainedModel& model) {
  if (const auto* nb = std::get_if<NBModel>(&model)) {
    return nb->log_prior(Stance::Left) - nb->log_prior(Stance::Right);
  }
  return std::get<SVMModel>(model).bias;
}

Stance predict(const TrainedModel& model, const SparseVector& x) {
  if (const auto* nb = std::get_if<NBModel>(&model)) {
    return predict_nb(*nb, x).label;
  }
  return predict_svm(std::get<SVMModel>(model), x).label;
}

StanceClassifier StanceClassifier::train(const std::vector<TokenizedDoc>& docs,
                                         const TrainConfig& config) {
  config.range.validate();
  StanceClassifier c;
  c.config = config;
  c.features = FeatureSpace::fit(docs, config.range, config.vectorizer);
  const Matrix matrix = c.features.transform(docs);
  const std::vector<Stance> labels = labels_of(docs);
  if (config.classifier == ClassifierKind::NaiveBayes) {
    c.model = train_nb(matrix, labels, config.alpha);
  } else {
    c.model = train_svm(matrix, labels, config.svm);
  }
  c.left_counts = feature_counts(docs, config.range, Stance::Left);
  c.right_counts = feature_counts(docs, config.range, Stance::Right);
  return c;
}

double StanceClassifier::decision_score(const TokenizedDoc& doc) const {
  return classify::decision_score(model, vectorize(doc));
}

Stance StanceClassifier::predict(const TokenizedDoc& doc) const {
  return classify::predict(model, vectorize(doc));
}

std::vector<Stance> StanceClassifier::predict(
    const std::vector<TokenizedDoc>& docs) const {
  std::vector<Stance> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(predict(d));
  return out;
}

}  // namespace stancecraft::classify
