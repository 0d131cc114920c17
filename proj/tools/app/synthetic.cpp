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

#include "app/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/rng.hpp"

namespace stancecraft::app {
namespace {

struct Sampler {
  std::vector<const WeightedWord*> words;
  std::vector<double> cumulative;

  void add(const std::vector<WeightedWord>& lexicon) {
    for (const auto& w : lexicon) {
      words.push_back(&w);
      cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) +
                           w.weight);
    }
  }

  const std::string& draw(Rng& rng) const {
    const double u = uniform_unit(rng) * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), words.size() - 1);
    return words[idx]->word;
  }
};

constexpr std::array<const char*, 8> kStates{"NY", "CA", "TX", "FL",
                                             "AR", "OH", "Puerto Rico", "WA"};

}  // namespace

void SyntheticSpec::validate() const {
  if (!(left_fraction > 0.0 && left_fraction < 1.0)) {
    throw ConfigError("left_fraction must lie strictly between 0 and 1");
  }
  if (shared_lexicon.empty()) throw ConfigError("shared lexicon is empty");
  for (const auto* lexicon : {&shared_lexicon, &left_lexicon, &right_lexicon}) {
    for (const auto& w : *lexicon) {
      if (!(w.weight > 0.0) || !std::isfinite(w.weight)) {
        throw ConfigError("lexicon weight for '" + w.word + "' must be positive");
      }
      if (w.word.empty()) throw ConfigError("lexicon contains an empty word");
    }
  }
  if (min_length == 0 || min_length > max_length) {
    throw ConfigError("tweet length range must satisfy 1 <= min <= max");
  }
}

SyntheticSpec SyntheticSpec::standard(std::uint64_t seed, double party_weight) {
  SyntheticSpec spec;
  spec.seed = seed;
  for (const char* w :
       {"covid", "pandemic", "virus", "health", "today", "people", "community",
        "week", "response", "public", "county", "family", "support", "work",
        "time", "help", "care", "local", "plan", "information"}) {
    spec.shared_lexicon.push_back({w, 1.0});
  }
  if (party_weight > 0.0) {
    for (const char* w : {"mask", "vaccine", "hospital", "relief", "distancing"}) {
      spec.left_lexicon.push_back({w, party_weight});
    }
    for (const char* w : {"briefing", "economy", "reopen", "border", "freedom"}) {
      spec.right_lexicon.push_back({w, party_weight});
    }
  }
  return spec;
}

corpus::Corpus generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Sampler left;
  left.add(spec.shared_lexicon);
  left.add(spec.left_lexicon);
  Sampler right;
  right.add(spec.shared_lexicon);
  right.add(spec.right_lexicon);

  Rng rng(spec.seed);
  corpus::Corpus out;
  out.provenance = "synthetic seed=" + std::to_string(spec.seed);
  out.records.reserve(spec.n_tweets);
  Timestamp clock = spec.start;
  const std::size_t span = spec.max_length - spec.min_length + 1;
  for (std::size_t i = 0; i < spec.n_tweets; ++i) {
    const bool is_left = uniform_unit(rng) < spec.left_fraction;
    const std::size_t length =
        spec.min_length + static_cast<std::size_t>(uniform_index(rng, span));
    const Sampler& sampler = is_left ? left : right;
    std::string text;
    for (std::size_t k = 0; k < length; ++k) {
      if (k) text.push_back(' ');
      text += sampler.draw(rng);
    }
    clock += std::chrono::seconds{1 + static_cast<long>(uniform_index(rng, 3600))};

    corpus::TweetRecord r;
    char id[32];
    std::snprintf(id, sizeof id, "syn-%06zu", i + 1);
    r.id = id;
    r.timestamp = clock;
    r.party = is_left ? (i % 20 == 0 ? corpus::Party::NPP : corpus::Party::D)
                      : corpus::Party::R;
    r.username = std::string(is_left ? "left_user_" : "right_user_") +
                 std::to_string(uniform_index(rng, 25));
    r.state = kStates[uniform_index(rng, kStates.size())];
    r.text = std::move(text);
    out.records.push_back(std::move(r));
  }
  return out;
}

void write_raw_jsonl(std::ostream& out, const corpus::Corpus& corpus) {
  for (const auto& r : corpus.records) {
    nlohmann::json obj = nlohmann::json::object();
    obj["id"] = r.id;
    obj["date"] = format_iso8601(r.timestamp);
    obj["username"] = r.username;
    obj["party"] = std::string(corpus::party_code(r.party));
    obj["state"] = r.state;
    obj["content"] = r.text;
    out << obj.dump() << '\n';
  }
}

}  // namespace stancecraft::app
