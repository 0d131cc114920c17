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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "stancecraft/classifier.hpp"
#include "stancecraft/rng.hpp"

using namespace stancecraft::classify;

namespace {

std::vector<TokenizedDoc> docs(std::size_t n) {
  stancecraft::Rng rng(7);
  std::vector<TokenizedDoc> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = stancecraft::uniform_index(rng, 2) == 0;
    out[i].label = left ? Stance::Left : Stance::Right;
    out[i].source_id = std::to_string(i);
    for (int t = 0; t < 12; ++t) {
      out[i].tokens.push_back("w" + std::to_string(stancecraft::uniform_index(rng, 800)));
    }
    out[i].tokens.push_back(left ? "mask" : "reopen");
  }
  return out;
}

TrainConfig config(ClassifierKind kind, VectorizerKind vectorizer) {
  TrainConfig cfg;
  cfg.classifier = kind;
  cfg.vectorizer = vectorizer;
  cfg.range = {1, 2};
  return cfg;
}

}  // namespace

static void BM_TrainNaiveBayes(benchmark::State& state) {
  const auto d = docs(static_cast<std::size_t>(state.range(0)));
  const auto cfg = config(ClassifierKind::NaiveBayes, VectorizerKind::Count);
  for (auto _ : state) benchmark::DoNotOptimize(StanceClassifier::train(d, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainNaiveBayes)->Arg(2000)->Arg(13000);

static void BM_TrainSvm(benchmark::State& state) {
  const auto d = docs(static_cast<std::size_t>(state.range(0)));
  const auto cfg = config(ClassifierKind::Svm, VectorizerKind::Tfidf);
  for (auto _ : state) benchmark::DoNotOptimize(StanceClassifier::train(d, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainSvm)->Arg(2000)->Arg(13000);

static void BM_Predict(benchmark::State& state) {
  const auto d = docs(2000);
  const auto clf = StanceClassifier::train(d, config(ClassifierKind::Svm, VectorizerKind::Count));
  for (auto _ : state) benchmark::DoNotOptimize(clf.predict(d));
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_Predict);

BENCHMARK_MAIN();
