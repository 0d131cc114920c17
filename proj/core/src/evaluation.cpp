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

#include "stancecraft/evaluation.hpp"

#include "stancecraft/error.hpp"

namespace stancecraft::classify {
namespace {

std::size_t slot_of(Stance s) { return s == Stance::Left ? 0 : 1; }

}  // namespace

const ClassMetrics& EvalReport::metrics(Stance s) const {
  return per_class[slot_of(s)];
}

std::size_t EvalReport::total() const {
  return confusion[0][0] + confusion[0][1] + confusion[1][0] + confusion[1][1];
}

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

EvalReport evaluate(const std::vector<Stance>& predictions,
                    const std::vector<Stance>& gold) {
  if (predictions.size() != gold.size()) {
    throw DomainError("prediction and gold label counts differ");
  }
  if (gold.empty()) throw DomainError("cannot evaluate zero predictions");
  EvalReport report;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++report.confusion[slot_of(gold[i])][slot_of(predictions[i])];
  }
  const std::size_t correct = report.confusion[0][0] + report.confusion[1][1];
  report.accuracy =
      static_cast<double>(correct) / static_cast<double>(gold.size());
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t tp = report.confusion[c][c];
    const std::size_t predicted = report.confusion[0][c] + report.confusion[1][c];
    const std::size_t actual = report.confusion[c][0] + report.confusion[c][1];
    auto& m = report.per_class[c];
    m.support = actual;
    m.precision = predicted ? static_cast<double>(tp) / predicted : 0.0;
    m.recall = actual ? static_cast<double>(tp) / actual : 0.0;
    m.f_measure = f_measure(m.precision, m.recall);
  }
  return report;
}

}  // namespace stancecraft::classify
