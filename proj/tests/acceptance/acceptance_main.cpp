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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"
#include "app/synthetic.hpp"
#include "oracles.hpp"
#include "stancecraft/classifier.hpp"
#include "stancecraft/corpus_store.hpp"
#include "stancecraft/evaluation.hpp"
#include "stancecraft/explain.hpp"
#include "stancecraft/grid.hpp"
#include "stancecraft/ngram_stats.hpp"
#include "stancecraft/porter_stemmer.hpp"
#include "stancecraft/textprep.hpp"
#include "stancecraft/windowed_tfidf.hpp"

namespace fs = std::filesystem;
namespace sc = stancecraft;
using namespace stancecraft::classify;
using sc::Rng;
using sc::corpus::Stance;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void check(bool condition, const std::string& what) {
    ++checks;
    if (condition) return;
    ++failures;
    if (ok) detail = "first failure: " + what;
    ok = false;
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---- stemming -------------------------------------------------------------

Outcome stemmer_fixtures() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> cases{
      {"distancing", "distanc"}, {"provide", "provid"}, {"briefing", "brief"},
      {"business", "busi"},      {"update", "updat"}};
  for (const auto& [word, stem] : cases) {
    const auto got = sc::textprep::porter_stem(word);
    o.check(got == stem, word + " -> " + got);
  }
  if (o.ok) o.detail = "5/5 exact";
  return o;
}

// ---- labels and distribution -----------------------------------------------

Outcome labels_and_distribution() {
  using sc::corpus::Party;
  Outcome o;
  o.check(sc::corpus::assign_label(Party::D) == Stance::Left, "D");
  o.check(sc::corpus::assign_label(Party::NPP) == Stance::Left, "NPP");
  o.check(sc::corpus::assign_label(Party::R) == Stance::Right, "R");
  const auto d = sc::corpus::distribution_from_counts(8979, 7269);
  o.check(d.left_percent == 55.3 && d.right_percent == 44.7,
          "percentages " + fmt(d.left_percent, 1) + "/" + fmt(d.right_percent, 1));
  if (o.ok) o.detail = "(8979, 7269) -> 55.3% / 44.7%";
  return o;
}

// ---- split law ------------------------------------------------------------

sc::corpus::Corpus numbered(std::size_t n) {
  sc::corpus::Corpus c;
  c.records.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.records[i].id = std::to_string(i);
    c.records[i].timestamp = sc::Timestamp{std::chrono::seconds{static_cast<long>(i)}};
  }
  return c;
}

Outcome split_law() {
  Outcome o;
  Rng rng(2024);
  std::vector<std::pair<std::size_t, std::uint64_t>> trials(200);
  for (auto& [n, seed] : trials) {
    n = oracle::draw(rng, 3, 100000);
    seed = rng();
  }
  // Largest first, so one corpus can be truncated in place.
  std::sort(trials.begin(), trials.end(), std::greater<>());
  auto corpus = numbered(trials.front().first);
  for (const auto& [n, seed] : trials) {
    if (!o.ok) break;
    corpus.records.resize(n);
    sc::corpus::SplitSpec spec;
    spec.seed = seed;
    const std::size_t tenth = n / 10;
    const auto [dev, train, test] = sc::corpus::split_sizes(n, spec);
    o.check(dev == tenth && test == tenth && train == n - 2 * tenth,
            "sizes for n=" + std::to_string(n));
    const auto a = sc::corpus::split(corpus, spec);
    const auto b = sc::corpus::split(corpus, spec);
    o.check(a.dev.size() == tenth && a.test.size() == tenth && a.train.size() == n - 2 * tenth,
            "partition sizes for n=" + std::to_string(n));
    std::vector<char> seen(n, 0);
    bool disjoint = true;
    for (const auto* part : {&a.dev, &a.train, &a.test}) {
      for (const auto& r : part->records) {
        char& s = seen[std::stoul(r.id)];
        disjoint = disjoint && !s;
        s = 1;
      }
    }
    bool exhaustive = true;
    for (char s : seen) exhaustive = exhaustive && s;
    o.check(disjoint && exhaustive, "disjoint/exhaustive for n=" + std::to_string(n));
    o.check(a.dev == b.dev && a.train == b.train && a.test == b.test,
            "determinism for n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "200 random n in [3, 100000]";
  return o;
}

// ---- distinct keywords -----------------------------------------------------

Outcome distinct_keywords_check() {
  using sc::ngram::Bigram;
  using sc::ngram::CountMap;
  Outcome o;
  const CountMap<Bigram> own{{{"wear", "mask"}, 456}};
  const CountMap<Bigram> other{{{"wear", "mask"}, 174}};
  const auto d = sc::ngram::distinct_keywords(own, other, 2.0);
  o.check(d.size() == 1 && d[0].difference == 282, "wear mask difference");
  o.check(sc::ngram::distinct_keywords(other, own, 2.0).empty(), "reverse direction");

  Rng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    CountMap<std::string> a;
    CountMap<std::string> b;
    for (int k = 0; k < 12; ++k) {
      const std::string key = "k" + std::to_string(k);
      const auto ca = static_cast<std::int64_t>(oracle::draw(rng, 0, 8));
      const auto cb = oracle::draw(rng, 0, 3) == 0 ? ca : static_cast<std::int64_t>(oracle::draw(rng, 0, 8));
      if (ca > 0) a[key] = ca;
      if (cb > 0) b[key] = cb;
    }
    const double ratio = 1.0 + 0.25 * static_cast<double>(oracle::draw(rng, 1, 16));
    const auto ab = sc::ngram::distinct_keywords(a, b, ratio);
    const auto ba = sc::ngram::distinct_keywords(b, a, ratio);
    std::set<std::string> keys_ab;
    for (const auto& k : ab) keys_ab.insert(k.key);
    for (const auto& k : ba) o.check(!keys_ab.contains(k.key), "distinct for both parties: " + k.key);
    for (const auto& k : ab) {
      o.check(k.own_count != k.other_count, "equal counts accepted: " + k.key);
      o.check(k.difference == k.own_count - k.other_count, "difference");
    }
    // Independent rule check over every key in either table.
    std::set<std::string> expected;
    for (const auto& [key, ca] : a) {
      const auto it = b.find(key);
      const std::int64_t cb = it == b.end() ? 0 : it->second;
      if (cb == 0 || static_cast<double>(ca) / static_cast<double>(cb) >= ratio) {
        expected.insert(key);
      }
    }
    o.check(expected == keys_ab, "rule mismatch on trial " + std::to_string(trial));
  }
  if (o.ok) o.detail = "fixture difference 282; 1000 random table pairs";
  return o;
}

// ---- bigram normalization --------------------------------------------------

Outcome bigram_normalization() {
  Outcome o;
  Rng rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto docs =
        oracle::random_docs(rng, oracle::draw(rng, 1, 8), Stance::Left, 10, 7, "d");
    const auto table = sc::ngram::bigram_counts(docs);
    std::map<std::string, std::set<std::string>> successors;
    for (const auto& [pair, c] : table.counts) successors[pair.first].insert(pair.second);
    for (const auto& [prev, count] : table.unigram_counts) {
      if (count <= 0) continue;
      double sum = 0.0;
      for (const auto& next : successors[prev]) sum += sc::ngram::bigram_prob(table, prev, next);
      worst = std::max(worst, std::abs(sum - 1.0));
      o.check(std::abs(sum - 1.0) <= 1e-12, "sum for " + prev + " = " + fmt(sum, 15));
    }
  }
  o.detail = (o.ok ? "" : o.detail + "; ") + "max |sum - 1| = " + fmt(worst, 17);
  return o;
}

// ---- windowed tf-idf -------------------------------------------------------

Outcome windowed_tfidf_oracle() {
  Outcome o;
  Rng rng(6);
  std::size_t records = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_docs(rng, oracle::draw(rng, 1, 30), Stance::Left, 12, 10, "a");
    const auto b = oracle::random_docs(rng, oracle::draw(rng, 1, 30), Stance::Right, 12, 10, "b");
    sc::tfidf::TfidfConfig cfg;
    cfg.window_size = 10;
    const auto got = sc::tfidf::chronological_pass(a, b, cfg);
    const auto want = oracle::windowed_tfidf(a, b, 10);
    o.check(got.size() == want.size(), "record count");
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
      ++records;
      o.check(got[i].word == want[i].word && got[i].score == want[i].score &&
                  got[i].window_index == want[i].block,
              "trial " + std::to_string(trial) + " tweet " + std::to_string(i));
    }
  }
  if (o.ok) o.detail = std::to_string(records) + " records identical";
  return o;
}

// ---- naive Bayes -----------------------------------------------------------

SparseVector sparse(const std::vector<double>& dense) {
  SparseVector v;
  v.dimension = dense.size();
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) v.entries.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
  }
  return v;
}

Outcome naive_bayes_oracle() {
  Outcome o;
  Rng rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = oracle::draw(rng, 2, 20);
    const std::size_t dim = oracle::draw(rng, 1, 15);
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
    std::vector<Stance> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : rows[i]) v = static_cast<double>(oracle::draw(rng, 0, 3));
      y[i] = i == 0   ? Stance::Left
             : i == 1 ? Stance::Right
                      : (oracle::draw(rng, 0, 1) ? Stance::Left : Stance::Right);
    }
    Matrix x;
    for (const auto& r : rows) x.push_back(sparse(r));
    const auto model = train_nb(x, y, 1.0);
    const oracle::DenseNaiveBayes ref(rows, y, 1.0);
    // Every training vector plus fresh probes.
    std::vector<std::vector<double>> probes = rows;
    for (int p = 0; p < 10; ++p) {
      std::vector<double> v(dim);
      for (auto& e : v) e = static_cast<double>(oracle::draw(rng, 0, 4));
      probes.push_back(v);
    }
    for (const auto& v : probes) {
      const auto got = predict_nb(model, sparse(v));
      const auto want = ref.classify(v);
      o.check(got.label == want.label, "argmax on trial " + std::to_string(trial));
      const double err = std::max(std::abs(got.log_posteriors[0] - want.log_post_left),
                                  std::abs(got.log_posteriors[1] - want.log_post_right));
      worst = std::max(worst, err);
      o.check(err <= 1e-10, "log-posterior error " + fmt(err, 14));
    }
  }
  o.detail = (o.ok ? "" : o.detail + "; ") + "max log-posterior error " + fmt(worst, 15);
  return o;
}

// ---- linear SVM ------------------------------------------------------------

struct Dataset {
  Matrix x;
  std::vector<Stance> y;
};

Dataset separable_2d(Rng& rng, std::size_t n, double nx, double ny) {
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

Outcome svm_properties() {
  Outcome o;
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const double angle = sc::uniform_unit(rng) * 6.283185307179586;
    const double nx = std::cos(angle);
    const double ny = std::sin(angle);
    const auto d = separable_2d(rng, 40, nx, ny);
    SvmConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto model = train_svm(d.x, d.y, cfg);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < d.x.size(); ++i) correct += predict_svm(model, d.x[i]).label == d.y[i];
    o.check(correct == d.x.size(), "training accuracy on dataset " + std::to_string(trial));
    const double initial = svm_objective({0.0, 0.0}, 0.0, cfg.lambda, d.x, d.y);
    o.check(svm_objective(model, d.x, d.y) < initial, "objective on dataset " + std::to_string(trial));

    Dataset twice = d;
    twice.x.insert(twice.x.end(), d.x.begin(), d.x.end());
    twice.y.insert(twice.y.end(), d.y.begin(), d.y.end());
    const auto doubled = train_svm(twice.x, twice.y, cfg);
    const auto probe = separable_2d(rng, 100, nx, ny);
    for (const auto& p : probe.x) {
      o.check(predict_svm(model, p).label == predict_svm(doubled, p).label,
              "duplication changed a probe on dataset " + std::to_string(trial));
    }
  }
  if (o.ok) o.detail = "20 datasets: accuracy 1.0, objective decreased, 2000 probes stable";
  return o;
}

// ---- metrics ---------------------------------------------------------------

Outcome metric_consistency() {
  Outcome o;
  const double f1 = f_measure(0.905, 0.895);
  const double f2 = f_measure(0.923, 0.937);
  o.check(std::abs(f1 - 0.900) <= 0.001, "F(0.905, 0.895) = " + fmt(f1));
  o.check(std::abs(f2 - 0.930) <= 0.001, "F(0.923, 0.937) = " + fmt(f2));
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double p = sc::uniform_unit(rng);
    const double r = sc::uniform_unit(rng);
    const double want = 2 * p * r / (p + r);
    o.check(std::abs(f_measure(p, r) - want) <= 1e-12, "formula at P=" + fmt(p) + " R=" + fmt(r));
  }
  if (o.ok) o.detail = "F = " + fmt(f1, 4) + " and " + fmt(f2, 4) + "; 1000 random (P, R)";
  return o;
}

// ---- synthetic end to end --------------------------------------------------

const fs::path kDataDir = STANCECRAFT_SHIPPED_DATA_DIR;

double synthetic_accuracy(std::uint64_t seed, double party_weight) {
  const auto corpus = sc::app::generate_synthetic(sc::app::SyntheticSpec::standard(seed, party_weight));
  std::ostringstream raw;
  sc::app::write_raw_jsonl(raw, corpus);
  std::istringstream in(raw.str());
  const auto ingested = sc::corpus::ingest(in, sc::corpus::Format::Jsonl);
  sc::corpus::SplitSpec split_spec;
  split_spec.seed = seed;
  const auto parts = sc::corpus::split(ingested.corpus, split_spec);

  sc::textprep::Pipeline pipeline;
  pipeline.stopwords = sc::textprep::StopwordPolicy::from_file(kDataDir / "stopwords_en.txt");
  pipeline.lemmas = sc::textprep::LemmaDictionary::load(kDataDir / "lemma_dict.tsv");
  pipeline.options.mode = sc::textprep::Mode::Lemma;

  CleanedSplit cleaned;
  cleaned.cleaning = sc::textprep::Mode::Lemma;
  cleaned.train = pipeline(parts.train);
  cleaned.test = pipeline(parts.test);
  GridSpec spec;
  spec.ranges = {{1, 2}};
  spec.vectorizers = {VectorizerKind::Count};
  spec.classifiers = {ClassifierKind::Svm};
  spec.svm.seed = seed;
  const auto cells = run_grid({cleaned}, spec);
  return cells.at(0).report.accuracy;
}

Outcome synthetic_pipeline() {
  Outcome o;
  double planted = 0.0;
  double zeroed = 0.0;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const double a = synthetic_accuracy(seed, 4.0);
    const double z = synthetic_accuracy(seed, 0.0);
    planted += a / 5.0;
    zeroed += z / 5.0;
    per_seed += (per_seed.empty() ? "" : " ") + fmt(a, 3) + "/" + fmt(z, 3);
  }
  o.check(planted >= 0.95, "planted mean accuracy " + fmt(planted));
  o.check(zeroed <= 0.60, "zeroed mean accuracy " + fmt(zeroed));
  o.detail = (o.ok ? "" : o.detail + "; ") + "mean " + fmt(planted) + " planted, " +
             fmt(zeroed) + " zeroed [" + per_seed + "]";
  return o;
}

// ---- tf-idf vectorizer -----------------------------------------------------

Outcome tfidf_vectorizer() {
  Outcome o;
  Rng rng(11);
  double worst = 0.0;
  std::size_t vectors = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<sc::textprep::TokenizedDoc> train;
    const std::size_t n = oracle::draw(rng, 1, 25);
    for (std::size_t i = 0; i < n; ++i) {
      train.push_back(oracle::doc(oracle::random_tokens(rng, 0, 8, 9),
                                  i % 2 ? Stance::Left : Stance::Right, static_cast<long>(i)));
    }
    const auto vocab = Vocabulary::build(train, {1, 2});
    if (vocab.size() == 0) continue;
    const auto fit = tfidf_vectorize(train, vocab);
    for (const auto& v : fit.matrix) {
      if (v.empty()) continue;
      ++vectors;
      const double err = std::abs(std::sqrt(v.squared_norm()) - 1.0);
      worst = std::max(worst, err);
      o.check(err <= 1e-9, "norm error " + fmt(err, 12));
    }
  }
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t df = 1; df <= n; ++df) {
      ++pairs;
      o.check(sc::tfidf::idf_from_counts(n, df) < sc::tfidf::idf_from_counts(n, df - 1),
              "idf not decreasing at N=" + std::to_string(n) + " df=" + std::to_string(df));
    }
  }
  o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(vectors) +
             " vectors, max norm error " + fmt(worst, 17) + "; " + std::to_string(pairs) +
             " idf steps";
  return o;
}

// ---- explanation linearity -------------------------------------------------

std::vector<sc::textprep::TokenizedDoc> stance_docs(Rng& rng, std::size_t n) {
  std::vector<sc::textprep::TokenizedDoc> docs;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = oracle::draw(rng, 0, 1) == 1;
    auto tokens = oracle::random_tokens(rng, 2, 8, 10);
    tokens.push_back(left ? "mask" : "reopen");
    docs.push_back(oracle::doc(tokens, left ? Stance::Left : Stance::Right,
                               static_cast<long>(i), "d" + std::to_string(i)));
  }
  return docs;
}

Outcome explanation_linearity() {
  Outcome o;
  Rng rng(12);
  double worst = 0.0;
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

    const auto x = clf.vectorize(probe);
    double score = 0.0;
    double best = -1.0;
    std::string best_feature;
    for (const auto& [col, v] : x.entries) {
      double c;
      if (const auto* nb = std::get_if<NBModel>(&clf.model)) {
        c = v * (nb->log_likelihood(Stance::Left, col) - nb->log_likelihood(Stance::Right, col));
      } else {
        c = v * std::get<SVMModel>(clf.model).weights[col];
      }
      score += c;
      const auto& f = clf.features.vocab.term(col);
      if (std::abs(c) > best || (std::abs(c) == best && f < best_feature)) {
        best = std::abs(c);
        best_feature = f;
      }
    }
    if (const auto* nb = std::get_if<NBModel>(&clf.model)) {
      score += nb->log_prior(Stance::Left) - nb->log_prior(Stance::Right);
    } else {
      score += std::get<SVMModel>(clf.model).bias;
    }

    double sum = e.intercept;
    for (const auto& r : e.rows) sum += r.contribution;
    const double err = std::max(std::abs(sum - e.score), std::abs(score - e.score));
    worst = std::max(worst, err);
    o.check(err <= 1e-9, "sum mismatch on model " + std::to_string(trial));
    if (!e.rows.empty()) {
      o.check(e.rows[0].feature == best_feature, "top row on model " + std::to_string(trial));
    }
  }
  o.detail = (o.ok ? "" : o.detail + "; ") + "50 models, max error " + fmt(worst, 15);
  return o;
}

// ---- CLI reproducibility ---------------------------------------------------

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stancecraft");
  std::ostringstream out;
  std::ostringstream err;
  const int code = sc::app::run_cli(args, out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> outputs_under(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".csv" || ext == ".svg" || ext == ".json") {
      files[fs::relative(entry.path(), root).string()] = slurp(entry.path());
    }
  }
  return files;
}

bool run_pipeline(int which, const fs::path& root) {
  const auto p = [&](const std::string& name) { return (root / name).string(); };
  const std::string data = kDataDir.string();
  bool ok = cli({"synth", "-n", "800", "--seed", "21", "-o", p("synth")}) == 0 &&
            cli({"ingest", p("synth") + "/synthetic.jsonl", "-o", p("ingest")}) == 0 &&
            cli({"split", p("ingest") + "/corpus.jsonl", "--seed", "21", "-o", p("split")}) == 0;
  const std::string train = p("split") + "/train.jsonl";
  const std::string test = p("split") + "/test.jsonl";
  switch (which) {
    case 0:
      ok = ok && cli({"profile", "bow", train, "--data-dir", data, "-o", p("bow")}) == 0 &&
           cli({"profile", "bigram", train, "--data-dir", data, "-o", p("bigram")}) == 0 &&
           cli({"distinct", "--own", p("bow") + "/freq_left.csv", "--other",
                p("bow") + "/freq_right.csv", "-o", p("distinct")}) == 0 &&
           cli({"chart", p("bow") + "/matched.csv", "--kind", "grouped_bar", "-o",
                p("matched.svg")}) == 0;
      break;
    case 1:
      ok = ok && cli({"profile", "tfidf", train, "--data-dir", data, "--window", "10", "-o",
                      p("tfidf")}) == 0 &&
           cli({"profile", "tfidf", train, "--data-dir", data, "--window", "all", "--margin-mode",
                "score", "-o", p("tfidf_all")}) == 0;
      break;
    default:
      ok = ok && cli({"train", train, "--data-dir", data, "--ngram", "unigram+bigram", "--seed",
                      "21", "-o", p("model")}) == 0 &&
           cli({"eval", test, "--data-dir", data, "--model", p("model") + "/model.json", "-o",
                p("eval")}) == 0 &&
           cli({"explain", test, "--data-dir", data, "--model", p("model") + "/model.json",
                "--all", "-o", p("explain")}) == 0 &&
           cli({"grid", "--train", train, "--test", test, "--data-dir", data, "--seed", "21",
                "-o", p("grid")}) == 0;
  }
  return ok;
}

Outcome cli_reproducibility() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / "stancecraft_acceptance";
  fs::remove_all(base);
  const char* names[] = {"profiles", "windowed tf-idf", "train/eval/explain/grid"};
  std::size_t compared = 0;
  for (int which = 0; which < 3; ++which) {
    const fs::path a = base / ("p" + std::to_string(which) + "a");
    const fs::path b = base / ("p" + std::to_string(which) + "b");
    o.check(run_pipeline(which, a) && run_pipeline(which, b),
            std::string("pipeline failed: ") + names[which]);
    if (!o.ok) break;
    const auto fa = outputs_under(a);
    const auto fb = outputs_under(b);
    o.check(fa.size() == fb.size() && !fa.empty(), "file sets differ");
    for (const auto& [name, bytes] : fa) {
      const auto it = fb.find(name);
      o.check(it != fb.end() && it->second == bytes, std::string(names[which]) + ": " + name);
      ++compared;
    }
  }
  fs::remove_all(base);
  if (o.ok) o.detail = "3 pipelines, " + std::to_string(compared) + " files byte-identical";
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"stemmer fixtures", 1, stemmer_fixtures},
      {"label and distribution consistency", 1, labels_and_distribution},
      {"split law", 5, split_law},
      {"distinct keywords", 5, distinct_keywords_check},
      {"bigram conditional normalization", 5, bigram_normalization},
      {"windowed tf-idf oracle", 10, windowed_tfidf_oracle},
      {"naive Bayes oracle equivalence", 10, naive_bayes_oracle},
      {"SVM properties", 10, svm_properties},
      {"metric consistency", 1, metric_consistency},
      {"synthetic end-to-end pipeline", 60, synthetic_pipeline},
      {"tf-idf vectorizer", 5, tfidf_vectorizer},
      {"explanation linearity", 5, explanation_linearity},
      {"CLI reproducibility", 30, cli_reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %2zu %s: %s (%.3f s of %.0f s%s)\n", pass ? "PASS" : "FAIL", i + 1, c.name,
                o.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%s: %zu of %zu criteria passed\n", failed ? "FAIL" : "PASS",
              criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
