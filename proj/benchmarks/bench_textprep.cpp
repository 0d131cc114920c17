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

#include "stancecraft/corpus_store.hpp"
#include "stancecraft/porter_stemmer.hpp"
#include "stancecraft/rng.hpp"
#include "stancecraft/textprep.hpp"

namespace tp = stancecraft::textprep;

namespace {

const std::vector<std::string> kWords{
    "distancing", "provide",  "briefing",  "business", "update",  "hospitals",
    "vaccines",   "reopening", "community", "relief",   "testing", "economy"};

stancecraft::corpus::Corpus sample_corpus(std::size_t n) {
  stancecraft::Rng rng(1);
  stancecraft::corpus::Corpus c;
  for (std::size_t i = 0; i < n; ++i) {
    stancecraft::corpus::TweetRecord r;
    r.id = std::to_string(i);
    for (int w = 0; w < 14; ++w) {
      r.text += kWords[stancecraft::uniform_index(rng, kWords.size())];
      r.text += w % 5 == 4 ? " #COVID19 https://t.co/x1 " : " ";
    }
    c.records.push_back(std::move(r));
  }
  return c;
}

}  // namespace

static void BM_PorterStem(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tp::porter_stem(kWords[i++ % kWords.size()]));
  }
}
BENCHMARK(BM_PorterStem);

static void BM_Tokenize(benchmark::State& state) {
  const std::string text =
      "Wear a mask, keep distancing & get tested! #COVID19 https://t.co/abc @cdcgov don't wait";
  for (auto _ : state) benchmark::DoNotOptimize(tp::tokenize(tp::strip_urls(text)));
}
BENCHMARK(BM_Tokenize);

static void BM_Preprocess(benchmark::State& state) {
  const auto corpus = sample_corpus(static_cast<std::size_t>(state.range(0)));
  const std::string data = STANCECRAFT_SHIPPED_DATA_DIR;
  tp::Pipeline pipeline;
  pipeline.stopwords = tp::StopwordPolicy::from_file(data + "/stopwords_en.txt");
  pipeline.lemmas = tp::LemmaDictionary::load(data + "/lemma_dict.tsv");
  pipeline.options.mode = state.range(1) ? tp::Mode::Lemma : tp::Mode::Stem;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Preprocess)->Args({1000, 0})->Args({1000, 1});

BENCHMARK_MAIN();
