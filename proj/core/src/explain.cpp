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

#include "stancecraft/explain.hpp"

#include <algorithm>
#include <cmath>

#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::classify {

Explanation explain_misclassification(
    const TrainedModel& model, const Vocabulary& vocab, const SparseVector& x,
    const ngram::FrequencyTable& left_stats,
    const ngram::FrequencyTable& right_stats) {
  if (x.dimension != vocab.size()) {
    throw DomainError("feature vector does not match the vocabulary");
  }
  Explanation out;
  out.intercept = intercept_term(model);
  out.score = decision_score(model, x);
  out.predicted = out.score >= 0.0 ? Stance::Left : Stance::Right;
  out.rows.reserve(x.entries.size());
  for (const auto& [col, value] : x.entries) {
    ExplanationRow row;
    row.feature = vocab.term(col);
    row.value = value;
    row.count_left = left_stats.count(row.feature);
    row.count_right = right_stats.count(row.feature);
    if (const auto* nb = std::get_if<NBModel>(&model)) {
      row.contribution = value * (nb->log_likelihood(Stance::Left, col) -
                                  nb->log_likelihood(Stance::Right, col));
    } else {
      row.contribution = value * std::get<SVMModel>(model).weights[col];
    }
    out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const ExplanationRow& a, const ExplanationRow& b) {
              const double ma = std::abs(a.contribution);
              const double mb = std::abs(b.contribution);
              if (ma != mb) return ma > mb;
              return a.feature < b.feature;
            });
  return out;
}

Explanation explain(const StanceClassifier& classifier,
                    const TokenizedDoc& doc) {
  return explain_misclassification(classifier.model, classifier.features.vocab,
                                   classifier.vectorize(doc),
                                   classifier.left_counts,
                                   classifier.right_counts);
}

void write_explanation_header(std::ostream& out) {
  csv::write_row(out, {"source_id", "gold", "predicted", "feature",
                       "count_left", "count_right", "contribution"});
}

void write_explanation_rows(std::ostream& out, const TokenizedDoc& doc,
                            const Explanation& explanation) {
  const std::string gold = std::to_string(corpus::stance_value(doc.label));
  const std::string predicted =
      std::to_string(corpus::stance_value(explanation.predicted));
  for (const auto& row : explanation.rows) {
    csv::write_row(out, {doc.source_id, gold, predicted, row.feature,
                         std::to_string(row.count_left),
                         std::to_string(row.count_right),
                         format_double(row.contribution)});
  }
}

}  // namespace stancecraft::classify
