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

#include "stancecraft/linear_svm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "stancecraft/error.hpp"
#include "stancecraft/rng.hpp"

namespace stancecraft::classify {

void SvmConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("SVM lambda must be positive");
  }
  if (epochs == 0) throw ConfigError("SVM needs at least one epoch");
}

namespace {

double label_sign(Stance s) { return s == Stance::Left ? 1.0 : -1.0; }

// Weight vector stored as scale * direction so that the per-step
// shrinkage costs O(1) and the hinge update costs O(nnz). The running sum
// of iterates is kept as offset + coefficient * direction for the same
// reason.
class ScaledWeights {
 public:
  explicit ScaledWeights(std::size_t dim)
      : direction_(dim, 0.0), offset_(dim, 0.0) {}

  double dot(const SparseVector& x) const { return scale_ * x.dot(direction_); }

  double squared_norm() const { return scale_ * scale_ * direction_norm2_; }

  void multiply(double factor) {
    scale_ *= factor;
    if (scale_ == 0.0) {
      fold_sum();
      std::fill(direction_.begin(), direction_.end(), 0.0);
      direction_norm2_ = 0.0;
      scale_ = 1.0;
    } else if (std::abs(scale_) < 1e-9) {
      renormalize();
    }
  }

  // w += step * x
  void add(const SparseVector& x, double step) {
    const double c = step / scale_;
    const double vx = x.dot(direction_);
    direction_norm2_ += 2.0 * c * vx + c * c * x.squared_norm();
    for (const auto& [col, v] : x.entries) {
      direction_[col] += c * v;
      offset_[col] -= sum_coeff_ * c * v;
    }
  }

  void accumulate() {
    sum_coeff_ += scale_;
    ++summed_;
  }

  std::size_t summed() const { return summed_; }

  std::vector<double> current() const {
    std::vector<double> w(direction_.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = scale_ * direction_[j];
    return w;
  }

  std::vector<double> average() const {
    std::vector<double> w(direction_.size());
    const double inv = 1.0 / static_cast<double>(summed_);
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] = (offset_[j] + sum_coeff_ * direction_[j]) * inv;
    }
    return w;
  }

 private:
  void fold_sum() {
    if (sum_coeff_ == 0.0) return;
    for (std::size_t j = 0; j < direction_.size(); ++j) {
      offset_[j] += sum_coeff_ * direction_[j];
    }
    sum_coeff_ = 0.0;
  }

  void renormalize() {
    fold_sum();
    direction_norm2_ = 0.0;
    for (double& v : direction_) {
      v *= scale_;
      direction_norm2_ += v * v;
    }
    scale_ = 1.0;
  }

  std::vector<double> direction_;
  double scale_ = 1.0;
  double direction_norm2_ = 0.0;
  std::vector<double> offset_;
  double sum_coeff_ = 0.0;
  std::size_t summed_ = 0;
};

// Identical (x, y) pairs collapsed into one example with a multiplicity.
struct WeightedExamples {
  std::vector<std::size_t> index;
  std::vector<double> count;
  double total = 0.0;
};

WeightedExamples collapse_duplicates(const Matrix& matrix,
                                     const std::vector<Stance>& labels) {
  using Key = std::pair<int, std::vector<std::pair<std::uint32_t, double>>>;
  std::map<Key, std::size_t> seen;
  WeightedExamples out;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Key key{stance_value(labels[i]), matrix[i].entries};
    const auto [it, fresh] = seen.emplace(std::move(key), out.index.size());
    if (fresh) {
      out.index.push_back(i);
      out.count.push_back(1.0);
    } else {
      out.count[it->second] += 1.0;
    }
    out.total += 1.0;
  }
  return out;
}

// Exact minimizer of the weighted hinge loss over b for fixed w. The loss
// is convex and piecewise linear in b; its slope rises by the example
// weight at each breakpoint, so the minimum sits at the weighted median.
// On a flat stretch the midpoint is taken.
double optimal_bias(const std::vector<double>& weights, const Matrix& matrix,
                    const std::vector<Stance>& labels,
                    const WeightedExamples& examples) {
  std::vector<std::pair<double, double>> breakpoints;
  breakpoints.reserve(examples.index.size());
  double positive = 0.0;
  for (std::size_t k = 0; k < examples.index.size(); ++k) {
    const std::size_t i = examples.index[k];
    const double y = label_sign(labels[i]);
    const double score = matrix[i].dot(weights);
    breakpoints.emplace_back(y - score, examples.count[k]);
    if (y > 0) positive += examples.count[k];
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  double cumulative = 0.0;
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    cumulative += breakpoints[k].second;
    if (cumulative > positive) return breakpoints[k].first;
    if (cumulative == positive && k + 1 < breakpoints.size()) {
      return 0.5 * (breakpoints[k].first + breakpoints[k + 1].first);
    }
  }
  return breakpoints.back().first;
}

}  // namespace

SVMModel train_svm(const Matrix& matrix, const std::vector<Stance>& labels,
                   const SvmConfig& config) {
  config.validate();
  if (matrix.size() != labels.size()) {
    throw DomainError("feature matrix and label counts differ");
  }
  if (matrix.size() < 2) throw DomainError("SVM needs at least two examples");
  const bool has_left =
      std::find(labels.begin(), labels.end(), Stance::Left) != labels.end();
  const bool has_right =
      std::find(labels.begin(), labels.end(), Stance::Right) != labels.end();
  if (!has_left || !has_right) {
    throw DomainError("SVM training data contains a single class");
  }
  const std::size_t dim = matrix.front().dimension;
  for (const auto& row : matrix) {
    if (row.dimension != dim) {
      throw DomainError("feature rows have inconsistent dimensions");
    }
  }

  const auto examples = collapse_duplicates(matrix, labels);
  const std::size_t m = examples.index.size();
  const double lambda = config.lambda;
  const double radius = 1.0 / std::sqrt(lambda);
  // Sampling a unique example uniformly and scaling its step by
  // count * m / n keeps the gradient estimate unbiased for the full data.
  const double unit = static_cast<double>(m) / examples.total;
  // Iterates from the second epoch on are averaged; a single-epoch run
  // averages everything.
  const std::size_t average_from = config.epochs > 1 ? m : 0;

  ScaledWeights weights(dim);
  double bias = 0.0;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(config.seed);

  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = m - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(rng, i + 1));
      std::swap(order[i], order[j]);
    }
    for (std::size_t k : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const SparseVector& x = matrix[examples.index[k]];
      const double y = label_sign(labels[examples.index[k]]);
      const bool violated = y * (weights.dot(x) + bias) < 1.0;

      if (t > 1) weights.multiply(1.0 - eta * lambda);
      if (violated) weights.add(x, eta * y * examples.count[k] * unit);
      const double norm2 = weights.squared_norm();
      if (norm2 > radius * radius) weights.multiply(radius / std::sqrt(norm2));

      if (t > average_from) weights.accumulate();
    }
    // The intercept is unregularized; it is set exactly between epochs
    // instead of taking the (unbounded) subgradient steps.
    bias = optimal_bias(weights.current(), matrix, labels, examples);
  }

  SVMModel model;
  model.config = config;
  model.weights = weights.summed() == 0 ? weights.current() : weights.average();
  model.bias = optimal_bias(model.weights, matrix, labels, examples);
  return model;
}

double svm_objective(const std::vector<double>& weights, double bias,
                     double lambda, const Matrix& matrix,
                     const std::vector<Stance>& labels) {
  if (matrix.size() != labels.size() || matrix.empty()) {
    throw DomainError("objective needs matching, non-empty data");
  }
  double norm2 = 0.0;
  for (double w : weights) norm2 += w * w;
  double hinge = 0.0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const double margin =
        label_sign(labels[i]) * (matrix[i].dot(weights) + bias);
    hinge += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * lambda * norm2 + hinge / static_cast<double>(matrix.size());
}

double svm_objective(const SVMModel& model, const Matrix& matrix,
                     const std::vector<Stance>& labels) {
  return svm_objective(model.weights, model.bias, model.config.lambda, matrix,
                       labels);
}

SvmPrediction predict_svm(const SVMModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension()) {
    throw DomainError("feature vector dimension " +
                      std::to_string(x.dimension) + " does not match model " +
                      std::to_string(model.dimension()));
  }
  SvmPrediction p;
  p.margin = x.dot(model.weights) + model.bias;
  p.label = p.margin >= 0.0 ? Stance::Left : Stance::Right;
  return p;
}

}  // namespace stancecraft::classify
