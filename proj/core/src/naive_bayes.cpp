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

#include "stancecraft/naive_bayes.hpp"

#include <algorithm>
#include <cmath>

#include "stancecraft/error.hpp"

namespace stancecraft::classify {

NBModel train_nb(const Matrix& matrix, const std::vector<Stance>& labels,
                 double alpha) {
  if (!(alpha > 0.0)) throw DomainError("naive Bayes alpha must be positive");
  if (matrix.size() != labels.size()) {
    throw DomainError("feature matrix and label counts differ");
  }
  if (matrix.empty()) throw DomainError("naive Bayes needs training examples");
  const std::size_t dim = matrix.front().dimension;

  std::array<std::size_t, 2> class_docs{};
  std::array<std::vector<double>, 2> feature_totals{
      std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].dimension != dim) {
      throw DomainError("feature rows have inconsistent dimensions");
    }
    const std::size_t slot = class_slot(labels[i]);
    ++class_docs[slot];
    for (const auto& [col, v] : matrix[i].entries) feature_totals[slot][col] += v;
  }
  for (Stance c : kClasses) {
    if (class_docs[class_slot(c)] == 0) {
      throw DomainError(std::string("class ") +
                        (c == Stance::Left ? "+1" : "-1") +
                        " is absent from the training data");
    }
  }

  NBModel model;
  model.alpha = alpha;
  const double n = static_cast<double>(matrix.size());
  for (std::size_t slot = 0; slot < 2; ++slot) {
    model.class_log_priors[slot] =
        std::log(static_cast<double>(class_docs[slot]) / n);
    double class_total = 0.0;
    for (double v : feature_totals[slot]) class_total += v;
    const double denom = alpha * static_cast<double>(dim) + class_total;
    auto& ll = model.feature_log_likelihoods[slot];
    ll.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      ll[j] = std::log((alpha + feature_totals[slot][j]) / denom);
    }
  }
  return model;
}

namespace {

std::array<double, 2> joint_scores(const NBModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension()) {
    throw DomainError("feature vector dimension " +
                      std::to_string(x.dimension) + " does not match model " +
                      std::to_string(model.dimension()));
  }
  std::array<double, 2> joint = model.class_log_priors;
  for (std::size_t slot = 0; slot < 2; ++slot) {
    joint[slot] += x.dot(model.feature_log_likelihoods[slot]);
  }
  return joint;
}

}  // namespace

NBPrediction predict_nb(const NBModel& model, const SparseVector& x) {
  const auto joint = joint_scores(model, x);
  const double hi = std::max(joint[0], joint[1]);
  const double log_norm =
      hi + std::log(std::exp(joint[0] - hi) + std::exp(joint[1] - hi));
  NBPrediction p;
  p.label = joint[0] >= joint[1] ? Stance::Left : Stance::Right;
  p.log_posteriors = {joint[0] - log_norm, joint[1] - log_norm};
  return p;
}

double nb_decision_score(const NBModel& model, const SparseVector& x) {
  const auto joint = joint_scores(model, x);
  return joint[0] - joint[1];
}

}  // namespace stancecraft::classify
