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

#include "stancecraft/grid.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::classify {
namespace {

std::string metric(double v) { return format_fixed(v, 3); }

GridCell run_cell(const CleanedSplit& split, NgramRange range,
                  VectorizerKind vectorizer, ClassifierKind classifier,
                  const GridSpec& spec) {
  TrainConfig config;
  config.classifier = classifier;
  config.vectorizer = vectorizer;
  config.range = range;
  config.cleaning = split.cleaning;
  config.alpha = spec.alpha;
  config.svm = spec.svm;
  const auto model = StanceClassifier::train(split.train, config);
  GridCell cell;
  cell.cleaning = split.cleaning;
  cell.range = range;
  cell.vectorizer = vectorizer;
  cell.classifier = classifier;
  cell.n_features = model.features.dimension();
  cell.report = evaluate(model.predict(split.test), labels_of(split.test));
  return cell;
}

std::string column_name(const GridCell& c) {
  return std::string(textprep::mode_name(c.cleaning)) + "/" +
         ngram_range_name(c.range);
}

}  // namespace

std::vector<GridCell> run_grid(const std::vector<CleanedSplit>& splits,
                               const GridSpec& spec) {
  for (const auto& s : splits) {
    if (s.train.empty() || s.test.empty()) {
      throw DomainError("grid needs non-empty train and test splits");
    }
  }
  struct Job {
    const CleanedSplit* split;
    NgramRange range;
    VectorizerKind vectorizer;
    ClassifierKind classifier;
  };
  std::vector<Job> jobs;
  for (const auto& s : splits) {
    for (auto r : spec.ranges) {
      for (auto v : spec.vectorizers) {
        for (auto c : spec.classifiers) jobs.push_back({&s, r, v, c});
      }
    }
  }
  std::vector<GridCell> cells;
  cells.reserve(jobs.size());
  if (!spec.parallel) {
    for (const auto& j : jobs) {
      cells.push_back(run_cell(*j.split, j.range, j.vectorizer, j.classifier, spec));
    }
    return cells;
  }
  std::vector<std::future<GridCell>> pending;
  pending.reserve(jobs.size());
  for (const auto& j : jobs) {
    pending.push_back(std::async(std::launch::async, [&spec, j] {
      return run_cell(*j.split, j.range, j.vectorizer, j.classifier, spec);
    }));
  }
  for (auto& f : pending) cells.push_back(f.get());
  return cells;
}

void write_grid_accuracy_csv(std::ostream& out,
                             const std::vector<GridCell>& cells,
                             VectorizerKind vectorizer) {
  std::vector<std::string> columns;
  std::map<std::string, std::map<std::string, std::string>> rows;
  std::vector<std::string> row_order;
  for (const auto& c : cells) {
    if (c.vectorizer != vectorizer) continue;
    const std::string col = column_name(c);
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) {
      columns.push_back(col);
    }
    const std::string row = std::string(classifier_name(c.classifier));
    if (std::find(row_order.begin(), row_order.end(), row) == row_order.end()) {
      row_order.push_back(row);
    }
    rows[row][col] = metric(c.report.accuracy);
    rows["# of features"][col] = std::to_string(c.n_features);
  }
  row_order.push_back("# of features");
  std::vector<std::string> header{"metric"};
  header.insert(header.end(), columns.begin(), columns.end());
  csv::write_row(out, header);
  for (const auto& r : row_order) {
    std::vector<std::string> line{r == "# of features" ? r : r + " accuracy"};
    for (const auto& col : columns) line.push_back(rows[r][col]);
    csv::write_row(out, line);
  }
}

void write_grid_metrics_csv(std::ostream& out,
                            const std::vector<GridCell>& cells) {
  csv::write_row(out, {"cleaning", "features", "vectorizer", "classifier",
                       "class", "precision", "recall", "f_measure", "support",
                       "accuracy"});
  for (const auto& c : cells) {
    for (Stance s : {Stance::Right, Stance::Left}) {
      const auto& m = c.report.metrics(s);
      csv::write_row(out, {std::string(textprep::mode_name(c.cleaning)),
                           ngram_range_name(c.range),
                           std::string(vectorizer_name(c.vectorizer)),
                           std::string(classifier_name(c.classifier)),
                           std::to_string(corpus::stance_value(s)),
                           metric(m.precision), metric(m.recall),
                           metric(m.f_measure), std::to_string(m.support),
                           metric(c.report.accuracy)});
    }
  }
}

void write_grid_confusion_csv(std::ostream& out,
                              const std::vector<GridCell>& cells) {
  csv::write_row(out, {"cleaning", "features", "vectorizer", "classifier",
                       "gold", "predicted", "count"});
  for (const auto& c : cells) {
    for (Stance g : {Stance::Left, Stance::Right}) {
      for (Stance p : {Stance::Left, Stance::Right}) {
        csv::write_row(
            out, {std::string(textprep::mode_name(c.cleaning)),
                  ngram_range_name(c.range),
                  std::string(vectorizer_name(c.vectorizer)),
                  std::string(classifier_name(c.classifier)),
                  std::to_string(corpus::stance_value(g)),
                  std::to_string(corpus::stance_value(p)),
                  std::to_string(c.report.confusion[class_slot(g)][class_slot(p)])});
      }
    }
  }
}

void write_report_csv(std::ostream& out, const EvalReport& report) {
  csv::write_row(out, {"class", "precision", "recall", "f_measure", "support"});
  for (Stance s : {Stance::Right, Stance::Left}) {
    const auto& m = report.metrics(s);
    csv::write_row(out, {std::to_string(corpus::stance_value(s)),
                         metric(m.precision), metric(m.recall),
                         metric(m.f_measure), std::to_string(m.support)});
  }
  csv::write_row(out, {"accuracy", "", "", metric(report.accuracy),
                       std::to_string(report.total())});
}

void write_confusion_csv(std::ostream& out, const EvalReport& report) {
  csv::write_row(out, {"gold", "predicted_+1", "predicted_-1"});
  for (Stance g : {Stance::Left, Stance::Right}) {
    csv::write_row(out, {std::to_string(corpus::stance_value(g)),
                         std::to_string(report.confusion[class_slot(g)][0]),
                         std::to_string(report.confusion[class_slot(g)][1])});
  }
}

}  // namespace stancecraft::classify
