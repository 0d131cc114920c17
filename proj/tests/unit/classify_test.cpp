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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "stancecraft/classifier.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/evaluation.hpp"
#include "stancecraft/explain.hpp"
#include "stancecraft/grid.hpp"

namespace sc = stancecraft;
using namespace stancecraft::classify;
using oracle::doc;

namespace {

SparseVector sparse(const std::vector<double>& dense) {
  SparseVector v;
  v.dimension = dense.size();
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) v.entries.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
  }
  return v;
}

struct Dataset {
  Matrix x;
  std::vector<Stance> y;
};

// Points on either side of a random line through the origin, with margin.
Dataset separable_2d(sc::Rng& rng, std::size_t n) {
  const double angle = sc::uniform_unit(rng) * 6.283185307179586;
  const double nx = std::cos(angle);
  const double ny = std::sin(angle);
  Dataset d;
  while (d.x.size() < n) {
    const double px = sc::uniform_unit(rng) * 4 - 2;
    const double py = sc::uniform_unit(rng) * 4 - 2;
    const double side = px * nx + py * ny;
    if (std::abs(side) < 0.3) continue;
    SparseVector v;
    v.dimension = 2;
    v.entries = {{0, px}, {1, py}};
    d.x.push_back(v);
    d.y.push_back(side > 0 ? Stance::Left : Stance::Right);
  }
  return d;
}

double accuracy(const SVMModel& m, const Dataset& d) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i) ok += predict_svm(m, d.x[i]).label == d.y[i];
  return static_cast<double>(ok) / static_cast<double>(d.x.size());
}

std::vector<TokenizedDoc> stance_docs(sc::Rng& rng, std::size_t n) {
  std::vector<TokenizedDoc> docs;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = oracle::draw(rng, 0, 1) == 1;
    auto tokens = oracle::random_tokens(rng, 2, 8, 10);
    tokens.push_back(left ? "mask" : "reopen");
    docs.push_back(doc(tokens, left ? Stance::Left : Stance::Right, static_cast<long>(i),
                       "d" + std::to_string(i)));
  }
  return docs;
}

}  // namespace

TEST(NaiveBayes, DirectFormula) {
  const Matrix x{sparse({1, 0}), sparse({0, 1})};
  const auto m = train_nb(x, {Stance::Left, Stance::Right}, 1.0);
  EXPECT_NEAR(std::exp(m.log_likelihood(Stance::Left, 0)), 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.log_prior(Stance::Left), std::log(0.5));
  EXPECT_DOUBLE_EQ(m.log_prior(Stance::Right), std::log(0.5));
}

TEST(NaiveBayes, LikelihoodsNormalize) {
  sc::Rng rng(89);
  Matrix x;
  std::vector<Stance> y;
  for (int i = 0; i < 12; ++i) {
    std::vector<double> row(7);
    for (auto& v : row) v = static_cast<double>(oracle::draw(rng, 0, 3));
    x.push_back(sparse(row));
    y.push_back(i % 3 ? Stance::Left : Stance::Right);
  }
  const auto m = train_nb(x, y, 0.5);
  for (const Stance c : kClasses) {
    double total = 0;
    for (std::size_t j = 0; j < m.dimension(); ++j) total += std::exp(m.log_likelihood(c, j));
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(NaiveBayes, Errors) {
  EXPECT_THROW(train_nb({sparse({1})}, {Stance::Left}), sc::DomainError);
  EXPECT_THROW(train_nb({sparse({1}), sparse({1})}, {Stance::Left, Stance::Right}, 0.0),
               sc::DomainError);
  const auto m = train_nb({sparse({1, 0}), sparse({0, 1})}, {Stance::Left, Stance::Right});
  EXPECT_THROW(predict_nb(m, sparse({1, 0, 0})), sc::DomainError);
}

TEST(NaiveBayes, ZeroVectorUsesPriorsAndTiesGoLeft) {
  const Matrix x{sparse({1, 0}), sparse({0, 1}), sparse({0, 1})};
  const auto m = train_nb(x, {Stance::Left, Stance::Right, Stance::Right});
  EXPECT_EQ(predict_nb(m, sparse({0, 0})).label, Stance::Right);
  const auto tied = train_nb({sparse({1, 1}), sparse({1, 1})}, {Stance::Left, Stance::Right});
  EXPECT_EQ(predict_nb(tied, sparse({0, 3})).label, Stance::Left);
}

TEST(NaiveBayes, MatchesBayesRuleOracle) {
  sc::Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = oracle::draw(rng, 2, 20);
    const std::size_t dim = oracle::draw(rng, 1, 15);
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
    std::vector<Stance> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : rows[i]) v = static_cast<double>(oracle::draw(rng, 0, 3));
      y[i] = i == 0 ? Stance::Left : i == 1 ? Stance::Right
                                              : (oracle::draw(rng, 0, 1) ? Stance::Left : Stance::Right);
    }
    Matrix x;
    for (const auto& r : rows) x.push_back(sparse(r));
    const auto model = train_nb(x, y, 1.0);
    const oracle::DenseNaiveBayes ref(rows, y, 1.0);
    for (int probe = 0; probe < 10; ++probe) {
      std::vector<double> v(dim);
      for (auto& e : v) e = static_cast<double>(oracle::draw(rng, 0, 4));
      const auto got = predict_nb(model, sparse(v));
      const auto want = ref.classify(v);
      EXPECT_EQ(got.label, want.label);
      EXPECT_NEAR(got.log_posteriors[0], want.log_post_left, 1e-10);
      EXPECT_NEAR(got.log_posteriors[1], want.log_post_right, 1e-10);
      EXPECT_NEAR(std::exp(got.log_posteriors[0]) + std::exp(got.log_posteriors[1]), 1.0, 1e-9);
    }
  }
}

TEST(Svm, OneDimensionalSeparable) {
  SparseVector pos;
  pos.dimension = 1;
  pos.entries = {{0, 1.0}};
  SparseVector neg = pos;
  neg.entries = {{0, -1.0}};
  const auto m = train_svm({pos, neg}, {Stance::Left, Stance::Right}, {});
  EXPECT_EQ(predict_svm(m, pos).label, Stance::Left);
  EXPECT_EQ(predict_svm(m, neg).label, Stance::Right);
}

TEST(Svm, SeparableFixturesReachFullAccuracyAndLowerObjective) {
  sc::Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = separable_2d(rng, 40);
    SvmConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto m = train_svm(d.x, d.y, cfg);
    EXPECT_EQ(accuracy(m, d), 1.0) << trial;
    const double initial = svm_objective({0.0, 0.0}, 0.0, cfg.lambda, d.x, d.y);
    EXPECT_LT(svm_objective(m, d.x, d.y), initial);
  }
}

TEST(Svm, DuplicationLeavesProbePredictionsUnchanged) {
  sc::Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = separable_2d(rng, 40);
    Dataset twice = d;
    twice.x.insert(twice.x.end(), d.x.begin(), d.x.end());
    twice.y.insert(twice.y.end(), d.y.begin(), d.y.end());
    const auto a = train_svm(d.x, d.y, {});
    const auto b = train_svm(twice.x, twice.y, {});
    const auto probe = separable_2d(rng, 50);
    for (const auto& p : probe.x) EXPECT_EQ(predict_svm(a, p).label, predict_svm(b, p).label);
  }
}

TEST(Svm, DeterministicPerSeed) {
  sc::Rng rng(107);
  const auto d = separable_2d(rng, 40);
  SvmConfig cfg;
  cfg.seed = 5;
  EXPECT_EQ(train_svm(d.x, d.y, cfg).weights, train_svm(d.x, d.y, cfg).weights);
}

TEST(Svm, PredictionRules) {
  SVMModel m;
  m.weights = {2.0, -1.0};
  m.bias = -0.5;
  EXPECT_EQ(predict_svm(m, sparse({0, 0})).label, Stance::Right);
  m.bias = 0.0;
  EXPECT_EQ(predict_svm(m, sparse({0, 0})).label, Stance::Left);
  EXPECT_DOUBLE_EQ(predict_svm(m, sparse({1.5, 2})).margin, 2.0 * 1.5 - 2.0);
  sc::Rng rng(109);
  m.bias = 0.3;
  SVMModel neg = m;
  for (auto& w : neg.weights) w = -w;
  neg.bias = -m.bias;
  for (int i = 0; i < 100; ++i) {
    const auto p = sparse({sc::uniform_unit(rng) - 0.5, sc::uniform_unit(rng) - 0.5});
    if (predict_svm(m, p).margin == 0.0) continue;
    EXPECT_NE(predict_svm(m, p).label, predict_svm(neg, p).label);
  }
}

TEST(Svm, Errors) {
  EXPECT_THROW(train_svm({sparse({1}), sparse({2})}, {Stance::Left, Stance::Left}, {}),
               sc::DomainError);
  SvmConfig bad;
  bad.lambda = 0;
  EXPECT_THROW(bad.validate(), sc::ConfigError);
}

TEST(Metrics, ReportedRows) {
  EXPECT_NEAR(f_measure(0.905, 0.895), 0.900, 0.001);
  EXPECT_NEAR(f_measure(0.923, 0.937), 0.930, 0.001);
  EXPECT_EQ(f_measure(0, 0), 0.0);
}

TEST(Metrics, FormulaProperty) {
  sc::Rng rng(113);
  for (int i = 0; i < 1000; ++i) {
    const double p = sc::uniform_unit(rng);
    const double r = sc::uniform_unit(rng);
    EXPECT_NEAR(f_measure(p, r), oracle::f_measure(p, r), 1e-15);
  }
}

TEST(Evaluate, AllCorrectAndConsistency) {
  const std::vector<Stance> gold{Stance::Left, Stance::Right, Stance::Left};
  const auto perfect = evaluate(gold, gold);
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.metrics(Stance::Left).f_measure, 1.0);
  EXPECT_EQ(perfect.metrics(Stance::Right).f_measure, 1.0);
  EXPECT_THROW(evaluate({Stance::Left}, gold), sc::DomainError);

  sc::Rng rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = oracle::draw(rng, 1, 40);
    std::vector<Stance> g(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = oracle::draw(rng, 0, 1) ? Stance::Left : Stance::Right;
      p[i] = oracle::draw(rng, 0, 1) ? Stance::Left : Stance::Right;
    }
    const auto rep = evaluate(p, g);
    EXPECT_EQ(rep.total(), n);
    double weighted_recall = 0;
    for (const Stance c : kClasses) {
      const auto& m = rep.metrics(c);
      weighted_recall += m.recall * static_cast<double>(m.support);
      EXPECT_NEAR(m.f_measure, oracle::f_measure(m.precision, m.recall), 1e-15);
    }
    EXPECT_NEAR(rep.accuracy, weighted_recall / static_cast<double>(n), 1e-12);
    EXPECT_NEAR(rep.accuracy,
                static_cast<double>(rep.confusion[0][0] + rep.confusion[1][1]) / static_cast<double>(n),
                1e-15);
  }
}

TEST(Explain, SingleFeatureSignDecides) {
  const std::vector<TokenizedDoc> train{doc({"mask"}, Stance::Left), doc({"reopen"}, Stance::Right)};
  TrainConfig cfg;
  cfg.classifier = ClassifierKind::NaiveBayes;
  const auto clf = StanceClassifier::train(train, cfg);
  const auto e = explain(clf, doc({"reopen"}, Stance::Left));
  ASSERT_EQ(e.rows.size(), 1u);
  EXPECT_LT(e.rows[0].contribution, 0);
  EXPECT_EQ(e.predicted, Stance::Right);
  EXPECT_EQ(e.rows[0].count_right, 1);
  EXPECT_EQ(e.rows[0].count_left, 0);
}

TEST(Explain, LinearityAndTopRow) {
  sc::Rng rng(131);
  for (int trial = 0; trial < 50; ++trial) {
    const auto train = stance_docs(rng, 30);
    TrainConfig cfg;
    cfg.classifier = trial % 2 ? ClassifierKind::Svm : ClassifierKind::NaiveBayes;
    cfg.vectorizer = trial % 4 < 2 ? VectorizerKind::Count : VectorizerKind::Tfidf;
    cfg.range = {1, 2};
    cfg.svm.seed = static_cast<std::uint64_t>(trial);
    const auto clf = StanceClassifier::train(train, cfg);
    const auto probe = stance_docs(rng, 1)[0];
    const auto e = explain(clf, probe);
    double sum = e.intercept;
    for (const auto& r : e.rows) sum += r.contribution;
    EXPECT_NEAR(sum, e.score, 1e-9);
    EXPECT_NEAR(e.score, clf.decision_score(probe), 1e-12);

    const auto x = clf.vectorize(probe);
    double best = -1;
    std::string best_feature;
    for (const auto& [col, v] : x.entries) {
      double c;
      if (const auto* nb = std::get_if<NBModel>(&clf.model)) {
        c = v * (nb->log_likelihood(Stance::Left, col) - nb->log_likelihood(Stance::Right, col));
      } else {
        c = v * std::get<SVMModel>(clf.model).weights[col];
      }
      const auto& f = clf.features.vocab.term(col);
      if (std::abs(c) > best || (std::abs(c) == best && f < best_feature)) {
        best = std::abs(c);
        best_feature = f;
      }
    }
    if (!e.rows.empty()) EXPECT_EQ(e.rows[0].feature, best_feature);
  }
}

TEST(Classifier, ParseNames) {
  EXPECT_EQ(parse_classifier("nb"), ClassifierKind::NaiveBayes);
  EXPECT_EQ(parse_classifier("linearsvc"), ClassifierKind::Svm);
  EXPECT_FALSE(parse_classifier("rf").has_value());
  EXPECT_EQ(parse_vectorizer("tfidf"), VectorizerKind::Tfidf);
}

TEST(ModelIo, RoundTripPredictsIdentically) {
  sc::Rng rng(137);
  const auto train = stance_docs(rng, 40);
  const auto test = stance_docs(rng, 20);
  for (const auto kind : {ClassifierKind::NaiveBayes, ClassifierKind::Svm}) {
    for (const auto vec : {VectorizerKind::Count, VectorizerKind::Tfidf}) {
      TrainConfig cfg;
      cfg.classifier = kind;
      cfg.vectorizer = vec;
      cfg.range = {1, 2};
      const auto clf = StanceClassifier::train(train, cfg);
      std::stringstream s;
      save_model(s, clf);
      const auto loaded = load_model(s);
      for (const auto& d : test) {
        EXPECT_EQ(loaded.decision_score(d), clf.decision_score(d));
        EXPECT_EQ(loaded.predict(d), clf.predict(d));
      }
      EXPECT_EQ(loaded.left_counts.counts, clf.left_counts.counts);
      EXPECT_EQ(loaded.config.range, cfg.range);
    }
  }
}

TEST(ModelIo, RejectsForeignOrTruncatedFiles) {
  std::stringstream junk("{\"format\":\"other\"}");
  EXPECT_THROW(load_model(junk), sc::SchemaError);
  std::stringstream broken("{\"format\":\"stancecraft-model\"");
  EXPECT_THROW(load_model(broken), sc::SchemaError);
}

TEST(Grid, SixteenCellsInFixedOrder) {
  sc::Rng rng(139);
  const auto train = stance_docs(rng, 60);
  const auto test = stance_docs(rng, 20);
  std::vector<CleanedSplit> splits{{sc::textprep::Mode::Stem, train, test},
                                   {sc::textprep::Mode::Lemma, train, test}};
  GridSpec spec;
  const auto cells = run_grid(splits, spec);
  ASSERT_EQ(cells.size(), 16u);
  for (const auto& c : cells) {
    EXPECT_GE(c.report.accuracy, 0.0);
    EXPECT_LE(c.report.accuracy, 1.0);
    EXPECT_GT(c.n_features, 0u);
  }
  EXPECT_EQ(cells[0].cleaning, sc::textprep::Mode::Stem);
  EXPECT_EQ(cells[15].cleaning, sc::textprep::Mode::Lemma);
  spec.parallel = false;
  const auto again = run_grid(splits, spec);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(cells[i].report.accuracy, again[i].report.accuracy);
    EXPECT_EQ(cells[i].classifier, again[i].classifier);
  }
  std::ostringstream table;
  write_grid_accuracy_csv(table, cells, VectorizerKind::Count);
  EXPECT_NE(table.str().find("# of features"), std::string::npos);
  EXPECT_NE(table.str().find("svm accuracy"), std::string::npos);
}
