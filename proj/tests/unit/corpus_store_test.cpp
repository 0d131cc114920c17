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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stancecraft/corpus_store.hpp"
#include "stancecraft/error.hpp"

namespace sc = stancecraft;
using namespace stancecraft::corpus;

namespace {

std::string jsonl_row(const std::string& id, const std::string& party,
                      const std::string& content,
                      const std::string& date = "2020-04-01T10:00:00Z") {
  return R"({"id":")" + id + R"(","date":")" + date +
         R"(","username":"u","party":")" + party +
         R"(","state":"NY","content":")" + content + "\"}\n";
}

IngestResult ingest_text(const std::string& text, Format f = Format::Jsonl,
                         const IngestOptions& options = {}) {
  std::istringstream in(text);
  return ingest(in, f, options);
}

Corpus numbered(std::size_t n) {
  Corpus c;
  for (std::size_t i = 0; i < n; ++i) {
    TweetRecord r;
    r.id = "id" + std::to_string(i);
    r.party = i % 3 == 0 ? Party::R : Party::D;
    r.timestamp = sc::Timestamp{std::chrono::seconds{1583020800 + static_cast<long>(i)}};
    r.text = "tweet " + std::to_string(i);
    c.records.push_back(r);
  }
  return c;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

}  // namespace

TEST(Ingest, EmptyStreamYieldsEmptyCorpus) {
  const auto r = ingest_text("");
  EXPECT_TRUE(r.corpus.empty());
  EXPECT_TRUE(r.rejects.empty());
}

TEST(Ingest, ThreeWellFormedRows) {
  const auto r = ingest_text(jsonl_row("a", "D", "x") + jsonl_row("b", "R", "y") +
                             jsonl_row("c", "NPP", "z"));
  ASSERT_EQ(r.corpus.size(), 3u);
  EXPECT_EQ(r.corpus.records[2].party, Party::NPP);
  EXPECT_EQ(r.corpus.records[1].id, "b");
}

TEST(Ingest, UnknownPartyIsRejectedWithLineNumber) {
  std::string text;
  for (int i = 0; i < 5; ++i) {
    text += jsonl_row("id" + std::to_string(i), i == 3 ? "X" : "D", "hello");
  }
  const auto r = ingest_text(text);
  EXPECT_EQ(r.corpus.size(), 4u);
  ASSERT_EQ(r.rejects.size(), 1u);
  EXPECT_EQ(r.rejects[0].line, 4u);
}

TEST(Ingest, MalformedRowsAreNotFatal) {
  const auto r = ingest_text(jsonl_row("a", "D", "x") + "{not json\n" +
                             R"({"id":"b","party":"D"})" "\n" +
                             jsonl_row("c", "R", "y", "2020-13-45"));
  EXPECT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.rejects.size(), 3u);
}

TEST(Ingest, DuplicateIdIsFatal) {
  EXPECT_THROW(ingest_text(jsonl_row("a", "D", "x") + jsonl_row("a", "R", "y")),
               sc::ValidationError);
}

TEST(Ingest, InvalidUtf8IsRejected) {
  const auto r = ingest_text(jsonl_row("a", "D", "bad \xC3 byte"));
  EXPECT_TRUE(r.corpus.empty());
  EXPECT_EQ(r.rejects.size(), 1u);
}

TEST(Ingest, DateRangeRejectsOutsideRecords) {
  IngestOptions opt;
  opt.from = sc::parse_iso8601("2020-03-01");
  opt.to = sc::parse_iso8601("2020-12-31T23:59:59Z");
  const auto r = ingest_text(jsonl_row("a", "D", "x", "2019-12-31T00:00:00Z") +
                                 jsonl_row("b", "D", "x", "2020-06-01T00:00:00Z"),
                             Format::Jsonl, opt);
  ASSERT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.corpus.records[0].id, "b");
  EXPECT_EQ(r.rejects.size(), 1u);
}

TEST(Ingest, TimezoneOffsetsNormalizeToUtc) {
  const auto r = ingest_text(jsonl_row("a", "D", "x", "2020-04-01T10:00:00-05:00"));
  ASSERT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(sc::format_iso8601(r.corpus.records[0].timestamp), "2020-04-01T15:00:00Z");
}

TEST(Ingest, CsvWithQuotedCommas) {
  const std::string text =
      "id,date,username,party,state,content\n"
      "a,2020-04-01 10:00:00,u,D,NY,\"masks, gloves, and \"\"care\"\"\"\n"
      "b,2020-04-02,u,R,TX,plain text\n"
      "c,2020-04-02,u,R,TX\n";
  const auto r = ingest_text(text, Format::Csv);
  ASSERT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.corpus.records[0].text, "masks, gloves, and \"care\"");
  ASSERT_EQ(r.rejects.size(), 1u);
  EXPECT_EQ(r.rejects[0].line, 4u);
}

TEST(Ingest, CsvMissingColumnIsSchemaError) {
  EXPECT_THROW(ingest_text("id,date,party\n", Format::Csv), sc::SchemaError);
}

TEST(Labels, PartyToStance) {
  EXPECT_EQ(stance_value(assign_label(Party::D)), 1);
  EXPECT_EQ(stance_value(assign_label(Party::NPP)), 1);
  EXPECT_EQ(stance_value(assign_label(Party::R)), -1);
  static_assert(assign_label(Party::R) == Stance::Right);
}

TEST(FilterCovid, SubstringSemantics) {
  Corpus c;
  for (const auto* text : {"Wear a mask to slow the pandemic",
                           "Happy Thanksgiving everyone", "#COVID19 update at noon"}) {
    TweetRecord r;
    r.id = text;
    r.text = text;
    c.records.push_back(r);
  }
  const auto kept = filter_covid(c, default_covid_terms());
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept.records[0].text, "Wear a mask to slow the pandemic");
  EXPECT_EQ(kept.records[1].text, "#COVID19 update at noon");
  ASSERT_TRUE(kept.filter_terms_applied.has_value());
  EXPECT_EQ(*kept.filter_terms_applied, default_covid_terms());
}

TEST(FilterCovid, EmptyTermsIsConfigError) {
  EXPECT_THROW(filter_covid(Corpus{}, {}), sc::ConfigError);
}

TEST(FilterCovid, IdempotentSubsequenceProperty) {
  sc::Rng rng(5);
  const std::vector<std::string> words{"flu", "mask", "covid", "vote", "cold", "tax"};
  for (int trial = 0; trial < 50; ++trial) {
    Corpus c;
    const std::size_t n = oracle::draw(rng, 0, 30);
    for (std::size_t i = 0; i < n; ++i) {
      TweetRecord r;
      r.id = std::to_string(i);
      for (int k = 0; k < 3; ++k) r.text += words[oracle::draw(rng, 0, words.size() - 1)] + " ";
      c.records.push_back(r);
    }
    const std::vector<std::string> terms{"flu", "covid"};
    const auto once = filter_covid(c, terms);
    const auto twice = filter_covid(once, terms);
    EXPECT_EQ(once.records, twice.records);
    std::size_t j = 0;
    for (const auto& r : c.records) {
      if (j < once.size() && once.records[j].id == r.id) ++j;
    }
    EXPECT_EQ(j, once.size());
  }
}

TEST(Split, SizesFollowFloorRule) {
  EXPECT_EQ(split_sizes(100, {}), std::make_tuple(10u, 80u, 10u));
  EXPECT_EQ(split_sizes(16248, {}), std::make_tuple(1624u, 13000u, 1624u));
  const auto parts = split(numbered(100), {});
  EXPECT_EQ(parts.dev.size(), 10u);
  EXPECT_EQ(parts.train.size(), 80u);
  EXPECT_EQ(parts.test.size(), 10u);
}

TEST(Split, DeterministicPerSeedAndSeedSensitive) {
  SplitSpec spec;
  spec.seed = 42;
  const auto c = numbered(50);
  const auto a = split(c, spec);
  const auto b = split(c, spec);
  EXPECT_EQ(a.train.records, b.train.records);
  EXPECT_EQ(a.dev.records, b.dev.records);
  spec.seed = 43;
  EXPECT_NE(split(c, spec).train.records, a.train.records);
}

TEST(Split, PartitionProperty) {
  sc::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = oracle::draw(rng, 3, 400);
    SplitSpec spec;
    spec.seed = rng();
    const auto c = numbered(n);
    const auto parts = split(c, spec);
    std::multiset<std::string> ids;
    for (const auto* p : {&parts.dev, &parts.train, &parts.test}) {
      for (const auto& r : p->records) ids.insert(r.id);
    }
    ASSERT_EQ(ids.size(), n);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), n);
    EXPECT_EQ(parts.dev.size(), n / 10);
    EXPECT_EQ(parts.test.size(), n / 10);
  }
}

TEST(Split, TinyCorporaAndBadSpecs) {
  EXPECT_THROW(split(numbered(2), {}), sc::ConfigError);
  EXPECT_THROW(split(Corpus{}, {}), sc::ConfigError);
  SplitSpec lenient;
  lenient.strict = false;
  const auto parts = split(numbered(2), lenient);
  EXPECT_EQ(parts.train.size(), 2u);
  SplitSpec bad;
  bad.train_fraction = 0.7;
  EXPECT_THROW(bad.validate(), sc::ConfigError);
  bad.train_fraction = 0.9;
  bad.dev_fraction = -0.1;
  bad.test_fraction = 0.2;
  EXPECT_THROW(bad.validate(), sc::ConfigError);
}

TEST(Distribution, ReportedCounts) {
  const auto d = distribution_from_counts(8979, 7269);
  EXPECT_DOUBLE_EQ(d.left_percent, 55.3);
  EXPECT_DOUBLE_EQ(d.right_percent, 44.7);
  EXPECT_EQ(d.total(), 16248u);
}

TEST(Distribution, TrivialCases) {
  auto d = distribution_from_counts(1, 0);
  EXPECT_DOUBLE_EQ(d.left_percent, 100.0);
  EXPECT_DOUBLE_EQ(d.right_percent, 0.0);
  d = distribution_from_counts(10, 10);
  EXPECT_DOUBLE_EQ(d.left_percent, 50.0);
  d = class_distribution(Corpus{});
  EXPECT_EQ(d.total(), 0u);
  EXPECT_DOUBLE_EQ(d.left_percent, 0.0);
}

TEST(Distribution, PercentagesSumToHundred) {
  sc::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t l = oracle::draw(rng, 0, 100000);
    const std::size_t r = oracle::draw(rng, l == 0 ? 1 : 0, 100000);
    const auto d = distribution_from_counts(l, r);
    EXPECT_NEAR(d.left_percent + d.right_percent, 100.0, 0.1 + 1e-9);
  }
}

TEST(Persist, RoundTripPreservesEverything) {
  auto c = numbered(3);
  c.records[1].text = "quotes \" and\nnewlines, commas and ünïcode";
  c.records[2].party = Party::NPP;
  c.provenance = "unit test";
  c.filter_terms_applied = std::vector<std::string>{"covid", "flu"};
  const auto path = temp_path("roundtrip.jsonl");
  persist(c, path);
  EXPECT_EQ(load(path), c);
  EXPECT_EQ(load_any(path).corpus, c);
}

TEST(Persist, TruncatedFileIsSchemaError) {
  const auto path = temp_path("full.jsonl");
  persist(numbered(5), path);
  std::ifstream in(path);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  const auto cut = temp_path("truncated.jsonl");
  std::ofstream(cut) << header << '\n' << first << '\n';
  EXPECT_THROW(load(cut), sc::SchemaError);
}

TEST(Persist, SchemaMismatchAndMissingFile) {
  const auto path = temp_path("future.jsonl");
  std::ofstream(path) << R"({"schema":99,"provenance":"","filter_terms":null,"records":0})" << '\n';
  EXPECT_THROW(load(path), sc::SchemaError);
  EXPECT_THROW(load(temp_path("does-not-exist.jsonl")), sc::IoError);
}

TEST(Persist, LoadAnyReadsRawExports) {
  const auto r = load_any(std::filesystem::path(STANCECRAFT_TEST_DATA_DIR) / "five_tweets.jsonl");
  EXPECT_EQ(r.corpus.size(), 5u);
  EXPECT_TRUE(r.rejects.empty());
}
