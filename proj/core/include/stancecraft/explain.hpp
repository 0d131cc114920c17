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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "stancecraft/classifier.hpp"

namespace stancecraft::classify {

struct ExplanationRow {
  std::string feature;
  double value = 0.0;
  std::int64_t count_left = 0;
  std::int64_t count_right = 0;
  // SVM: w_j * x_j. NB: x_j * (log P(j|+1) - log P(j|-1)).
  double contribution = 0.0;
};

struct Explanation {
  Stance predicted = Stance::Left;
  double score = 0.0;
  double intercept = 0.0;
  // Sorted by |contribution| desc, then feature asc.
  std::vector<ExplanationRow> rows;
};

// Per-feature breakdown of a decision. intercept + sum of contributions
// equals the decision score.
Explanation explain_misclassification(
    const TrainedModel& model, const Vocabulary& vocab, const SparseVector& x,
    const ngram::FrequencyTable& left_stats,
    const ngram::FrequencyTable& right_stats);

Explanation explain(const StanceClassifier& classifier,
                    const TokenizedDoc& doc);

// CSV "source_id,gold,predicted,feature,count_left,count_right,
// contribution"; one row per feature of each explained document.
void write_explanation_header(std::ostream& out);
void write_explanation_rows(std::ostream& out, const TokenizedDoc& doc,
                            const Explanation& explanation);

}  // namespace stancecraft::classify
