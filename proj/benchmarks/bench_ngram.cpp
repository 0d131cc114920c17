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

#include "stancecraft/ngram_stats.hpp"
#include "stancecraft/rng.hpp"
#include "stancecraft/windowed_tfidf.hpp"

using stancecraft::corpus::Stance;
using stancecraft::textprep::TokenizedDoc;

namespace {

std::vector<TokenizedDoc> docs(std::size_t n, Stance label, std::uint64_t seed) {
  stancecraft::Rng rng(seed);
  std::vector<TokenizedDoc> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].label = label;
    out[i].timestamp = stancecraft::Timestamp{std::chrono::seconds{static_cast<long>(i)}};
    out[i].source_id = std::to_string(i);
    for (int t = 0; t < 12; ++t) {
      out[i].tokens.push_back("w" + std::to_string(stancecraft::uniform_index(rng, 500)));
    }
  }
  return out;
}

}  // namespace

static void BM_BowCounts(benchmark::State& state) {
  const auto d = docs(static_cast<std::size_t>(state.range(0)), Stance::Left, 1);
  for (auto _ : state) benchmark::DoNotOptimize(stancecraft::ngram::bow_counts(d));
}
BENCHMARK(BM_BowCounts)->Arg(1000)->Arg(10000);

static void BM_BigramCounts(benchmark::State& state) {
  const auto d = docs(static_cast<std::size_t>(state.range(0)), Stance::Left, 2);
  for (auto _ : state) benchmark::DoNotOptimize(stancecraft::ngram::bigram_counts(d));
}
BENCHMARK(BM_BigramCounts)->Arg(1000)->Arg(10000);

static void BM_ChronologicalPass(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = docs(n, Stance::Left, 3);
  const auto b = docs(n, Stance::Right, 4);
  stancecraft::tfidf::TfidfConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(stancecraft::tfidf::chronological_pass(a, b, cfg));
}
BENCHMARK(BM_ChronologicalPass)->Arg(1000)->Arg(8000);

BENCHMARK_MAIN();
