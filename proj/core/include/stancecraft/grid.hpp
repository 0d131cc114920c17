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
#include <ostream>
#include <vector>

#include "stancecraft/classifier.hpp"
#include "stancecraft/evaluation.hpp"

namespace stancecraft::classify {

struct CleanedSplit {
  textprep::Mode cleaning = textprep::Mode::Lemma;
  std::vector<TokenizedDoc> train;
  std::vector<TokenizedDoc> test;
};

struct GridSpec {
  std::vector<NgramRange> ranges{{1, 1}, {1, 2}};
  std::vector<VectorizerKind> vectorizers{VectorizerKind::Count,
                                          VectorizerKind::Tfidf};
  std::vector<ClassifierKind> classifiers{ClassifierKind::NaiveBayes,
                                          ClassifierKind::Svm};
  double alpha = 1.0;
  SvmConfig svm;
  // Cells may be evaluated concurrently; output order is fixed either way.
  bool parallel = true;
};

struct GridCell {
  textprep::Mode cleaning = textprep::Mode::Lemma;
  NgramRange range;
  VectorizerKind vectorizer = VectorizerKind::Count;
  ClassifierKind classifier = ClassifierKind::Svm;
  std::size_t n_features = 0;
  EvalReport report;
};

// Cells ordered by cleaning (input order), range, vectorizer, classifier.
std::vector<GridCell> run_grid(const std::vector<CleanedSplit>& splits,
                               const GridSpec& spec);

// Accuracy table for one vectorizer: rows are the classifiers plus
// "# of features", columns are cleaning x feature space.
void write_grid_accuracy_csv(std::ostream& out,
                             const std::vector<GridCell>& cells,
                             VectorizerKind vectorizer);
// Long format: cleaning,features,vectorizer,classifier,class,precision,
// recall,f_measure,support,accuracy.
void write_grid_metrics_csv(std::ostream& out,
                            const std::vector<GridCell>& cells);
// cleaning,features,vectorizer,classifier,gold,predicted,count.
void write_grid_confusion_csv(std::ostream& out,
                              const std::vector<GridCell>& cells);

void write_report_csv(std::ostream& out, const EvalReport& report);
void write_confusion_csv(std::ostream& out, const EvalReport& report);

}  // namespace stancecraft::classify
