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

#include <array>
#include <cstddef>
#include <vector>

#include "stancecraft/features.hpp"

namespace stancecraft::classify {

// Slot 0 holds the left (+1) class, slot 1 the right (-1) class.
constexpr std::size_t class_slot(Stance s) {
  return s == Stance::Left ? 0 : 1;
}
inline constexpr std::array<Stance, 2> kClasses{Stance::Left, Stance::Right};

struct NBModel {
  double alpha = 1.0;
  std::array<double, 2> class_log_priors{};
  std::array<std::vector<double>, 2> feature_log_likelihoods;

  std::size_t dimension() const { return feature_log_likelihoods[0].size(); }
  double log_prior(Stance s) const { return class_log_priors[class_slot(s)]; }
  double log_likelihood(Stance s, std::size_t column) const {
    return feature_log_likelihoods[class_slot(s)][column];
  }
};

// Multinomial naive Bayes with additive smoothing:
//   log P(c)     = ln(n_c / n)
//   log P(j | c) = ln((alpha + N_cj) / (alpha * |V| + N_c))
// Throws DomainError when a class is missing or alpha <= 0.
NBModel train_nb(const Matrix& matrix, const std::vector<Stance>& labels,
                 double alpha = 1.0);

struct NBPrediction {
  Stance label = Stance::Left;
  // Normalized: exp() of the two entries sums to one.
  std::array<double, 2> log_posteriors{};
};

// argmax of log P(c) + sum_j x_j log P(j | c); ties go to +1.
NBPrediction predict_nb(const NBModel& model, const SparseVector& x);

// Joint log score of the left class minus that of the right class.
double nb_decision_score(const NBModel& model, const SparseVector& x);

}  // namespace stancecraft::classify
