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
#include <vector>

#include "stancecraft/features.hpp"

namespace stancecraft::classify {

struct SvmConfig {
  double lambda = 1e-4;
  std::size_t epochs = 20;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SVMModel {
  std::vector<double> weights;
  double bias = 0.0;
  SvmConfig config;

  std::size_t dimension() const { return weights.size(); }
};

// Minimizes (lambda/2)|w|^2 + (1/n) sum max(0, 1 - y (w.x + b)) with
// Pegasos-style stochastic subgradient steps 1/(lambda t) over seeded
// per-epoch shuffles. The intercept is not regularized. Returns the
// averaged iterate. Throws DomainError for single-class input.
SVMModel train_svm(const Matrix& matrix, const std::vector<Stance>& labels,
                   const SvmConfig& config);

double svm_objective(const std::vector<double>& weights, double bias,
                     double lambda, const Matrix& matrix,
                     const std::vector<Stance>& labels);
double svm_objective(const SVMModel& model, const Matrix& matrix,
                     const std::vector<Stance>& labels);

struct SvmPrediction {
  Stance label = Stance::Left;
  double margin = 0.0;
};

// margin = w.x + b; label = sign(margin) with 0 mapped to +1.
SvmPrediction predict_svm(const SVMModel& model, const SparseVector& x);

}  // namespace stancecraft::classify
