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

#include "app/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "app/docs_io.hpp"
#include "app/manifest.hpp"
#include "app/svg_chart.hpp"
#include "app/synthetic.hpp"
#include "stancecraft/classifier.hpp"
#include "stancecraft/corpus_store.hpp"
#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/explain.hpp"
#include "stancecraft/grid.hpp"
#include "stancecraft/ngram_stats.hpp"
#include "stancecraft/strings.hpp"
#include "stancecraft/textprep.hpp"
#include "stancecraft/windowed_tfidf.hpp"

namespace stancecraft::app {
namespace fs = std::filesystem;
using textprep::TokenizedDoc;

namespace {

struct Common {
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string data_dir;
};

struct PrepFlags {
  std::string mode = "lemma";
  std::string stoplist;
  std::string custom_stoplist;
  std::string lemma_dict;
  bool drop_hashtags = false;
  bool keep_hashtags = false;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STANCECRAFT_SEED"); env && *env) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ConfigError("STANCECRAFT_SEED is not an unsigned integer: " +
                        std::string(text));
    }
    return value;
  }
  return 0;
}

fs::path data_dir(const Common& c) {
  if (!c.data_dir.empty()) return c.data_dir;
  if (const char* env = std::getenv("STANCECRAFT_DATA_DIR"); env && *env) {
    return env;
  }
  return STANCECRAFT_DEFAULT_DATA_DIR;
}

void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw ConfigError(what + " path is empty");
  if (!fs::is_regular_file(path)) {
    throw ConfigError(what + " not found: " + path);
  }
}

fs::path prepare_out(const Common& c) {
  if (c.out_dir.empty()) throw ConfigError("--out directory is required");
  fs::create_directories(c.out_dir);
  return c.out_dir;
}

textprep::Mode mode_of(const std::string& name) {
  const auto m = textprep::parse_mode(name);
  if (!m) throw ConfigError("unknown cleaning mode '" + name + "'");
  return *m;
}

// Resolved preprocessing resources, recorded into the manifest.
struct Prep {
  textprep::Pipeline pipeline;
  std::map<std::string, std::string> config;
  std::vector<fs::path> resources;
};

Prep build_prep(const PrepFlags& f, const Common& c,
                bool default_drop_hashtags = false) {
  const fs::path dir = data_dir(c);
  Prep p;
  const std::string stoplist =
      f.stoplist.empty() ? (dir / "stopwords_en.txt").string() : f.stoplist;
  const std::string lemma =
      f.lemma_dict.empty() ? (dir / "lemma_dict.tsv").string() : f.lemma_dict;
  require_file(stoplist, "stoplist");
  p.pipeline.stopwords = textprep::StopwordPolicy::from_file(stoplist);
  p.resources.push_back(stoplist);
  if (!f.custom_stoplist.empty()) {
    require_file(f.custom_stoplist, "custom stoplist");
    const auto words = read_word_list(f.custom_stoplist);
    p.pipeline.stopwords.custom_additions = {words.begin(), words.end()};
    p.resources.push_back(f.custom_stoplist);
  }
  p.pipeline.options.mode = mode_of(f.mode);
  if (p.pipeline.options.mode == textprep::Mode::Lemma) {
    require_file(lemma, "lemma dictionary");
    p.pipeline.lemmas = textprep::LemmaDictionary::load(lemma);
    p.resources.push_back(lemma);
  }
  if (f.drop_hashtags && f.keep_hashtags) {
    throw ConfigError("--drop-hashtags and --keep-hashtags are exclusive");
  }
  p.pipeline.options.drop_hashtags =
      f.drop_hashtags || (default_drop_hashtags && !f.keep_hashtags);
  p.config["mode"] = std::string(textprep::mode_name(p.pipeline.options.mode));
  p.config["drop_hashtags"] = p.pipeline.options.drop_hashtags ? "true" : "false";
  return p;
}

corpus::Corpus load_corpus_input(const std::string& path) {
  require_file(path, "input");
  return corpus::load_any(path).corpus;
}

std::vector<TokenizedDoc> load_docs_input(const std::string& path,
                                          const Prep& prep) {
  require_file(path, "input");
  if (is_docs_file(path)) {
    std::ifstream in(path, std::ios::binary);
    return read_docs(in);
  }
  return prep.pipeline(corpus::load_any(path).corpus);
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

// Manifest plus the list of files it covers; `finish` digests outputs.
struct Run {
  Manifest manifest;
  fs::path dir;
  std::vector<std::string> files;

  Run(std::string command, std::uint64_t seed, fs::path out_dir) : dir(std::move(out_dir)) {
    manifest.command = std::move(command);
    manifest.seed = seed;
  }
  std::ofstream create(const std::string& name) {
    files.push_back(name);
    return open_out(dir / name);
  }
  void chart(const std::string& name, const std::vector<ChartRow>& rows,
             ChartKind kind, const ChartOptions& options) {
    if (rows.empty()) return;
    emit_chart(rows, kind, dir / name, options);
    files.push_back(name);
  }
  void finish(const std::string& manifest_name = "manifest.json") {
    for (const auto& f : files) manifest.add_output(dir, f);
    manifest.write(dir / manifest_name);
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-o,--out", c.out_dir, "Output directory");
  sub->add_option("--seed", c.seed, "Random seed (falls back to STANCECRAFT_SEED)");
  sub->add_option("--data-dir", c.data_dir,
                  "Directory holding stoplists, lemma dictionary and filters");
}

void add_prep(CLI::App* sub, PrepFlags& f) {
  sub->add_option("--mode", f.mode, "Cleaning mode: stem or lemma");
  sub->add_option("--stoplist", f.stoplist, "Base stopword list");
  sub->add_option("--custom-stoplist", f.custom_stoplist,
                  "Custom stopword additions (replaces amp, rt, u, w)");
  sub->add_option("--lemma-dict", f.lemma_dict, "Lemma dictionary TSV");
  sub->add_flag("--drop-hashtags", f.drop_hashtags, "Remove #hashtag tokens");
  sub->add_flag("--keep-hashtags", f.keep_hashtags, "Keep #hashtag tokens");
}

std::string num(double v) { return format_double(v); }

// ---- ingest / filter / split / preprocess -------------------------------

struct IngestArgs {
  Common common;
  std::string input;
  std::string format;
  std::string from;
  std::string to;
  std::string provenance;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  require_file(a.input, "input");
  corpus::Format format = fs::path(a.input).extension() == ".csv"
                              ? corpus::Format::Csv
                              : corpus::Format::Jsonl;
  if (!a.format.empty()) {
    const auto f = corpus::parse_format(a.format);
    if (!f) throw ConfigError("unknown format '" + a.format + "'");
    format = *f;
  }
  corpus::IngestOptions options;
  options.provenance = a.provenance.empty() ? fs::path(a.input).filename().string()
                                            : a.provenance;
  auto date = [](const std::string& s, const char* what) -> std::optional<Timestamp> {
    if (s.empty()) return std::nullopt;
    auto ts = parse_iso8601(s);
    if (!ts) throw ConfigError(std::string("bad ") + what + " date '" + s + "'");
    return ts;
  };
  options.from = date(a.from, "--from");
  options.to = date(a.to, "--to");

  const fs::path dir = prepare_out(a.common);
  std::ifstream in(a.input, std::ios::binary);
  if (!in) throw IoError("cannot read " + a.input);
  const auto result = corpus::ingest(in, format, options);

  Run run("ingest", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  run.manifest.config["format"] = format == corpus::Format::Csv ? "csv" : "jsonl";
  run.manifest.config["from"] = a.from;
  run.manifest.config["to"] = a.to;
  run.manifest.config["provenance"] = options.provenance;
  corpus::persist(result.corpus, dir / "corpus.jsonl");
  run.files.push_back("corpus.jsonl");
  {
    auto rej = run.create("rejects.csv");
    csv::write_row(rej, {"line", "reason"});
    for (const auto& r : result.rejects) {
      csv::write_row(rej, {std::to_string(r.line), r.reason});
    }
  }
  run.finish();
  out << "ingested " << result.corpus.size() << " records, "
      << result.rejects.size() << " rejected\n";
  return kExitOk;
}

struct FilterArgs {
  Common common;
  std::string input;
  std::vector<std::string> terms;
  bool terms_default = false;
};

int cmd_filter(const FilterArgs& a, std::ostream& out) {
  const auto corpus = load_corpus_input(a.input);
  if (!a.terms.empty() && a.terms_default) {
    throw ConfigError("--terms and --terms-default are exclusive");
  }
  const auto& terms = a.terms.empty() ? corpus::default_covid_terms() : a.terms;
  const fs::path dir = prepare_out(a.common);
  const auto kept = corpus::filter_covid(corpus, terms);
  Run run("filter", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  std::string joined;
  for (const auto& t : terms) joined += (joined.empty() ? "" : ",") + t;
  run.manifest.config["terms"] = joined;
  corpus::persist(kept, dir / "filtered.jsonl");
  run.files.push_back("filtered.jsonl");
  run.finish();
  out << "kept " << kept.size() << " of " << corpus.size() << " records\n";
  return kExitOk;
}

struct SplitArgs {
  Common common;
  std::string input;
  double dev = 0.1;
  double train = 0.8;
  double test = 0.1;
  bool lenient = false;
};

void write_distribution_row(std::ostream& out, const std::string& name,
                            const corpus::ClassDistribution& d) {
  csv::write_row(out, {name, std::to_string(d.left), std::to_string(d.right),
                       format_fixed(d.left_percent, 1),
                       format_fixed(d.right_percent, 1),
                       std::to_string(d.total())});
}

int cmd_split(const SplitArgs& a, std::ostream& out) {
  const auto corpus = load_corpus_input(a.input);
  corpus::SplitSpec spec;
  spec.dev_fraction = a.dev;
  spec.train_fraction = a.train;
  spec.test_fraction = a.test;
  spec.seed = resolve_seed(a.common.seed);
  spec.strict = !a.lenient;
  spec.validate();
  const fs::path dir = prepare_out(a.common);
  const auto parts = corpus::split(corpus, spec);

  Run run("split", spec.seed, dir);
  run.manifest.add_input(a.input);
  run.manifest.config["fractions"] = num(a.dev) + "/" + num(a.train) + "/" + num(a.test);
  run.manifest.config["strict"] = spec.strict ? "true" : "false";
  const std::pair<const char*, const corpus::Corpus*> named[] = {
      {"dev", &parts.dev}, {"train", &parts.train}, {"test", &parts.test}};
  for (const auto& [name, part] : named) {
    const std::string file = std::string(name) + ".jsonl";
    corpus::persist(*part, dir / file);
    run.files.push_back(file);
  }
  {
    auto dist = run.create("distribution.csv");
    csv::write_row(dist, {"split", "left", "right", "left_percent",
                          "right_percent", "total"});
    for (const auto& [name, part] : named) {
      write_distribution_row(dist, name, corpus::class_distribution(*part));
    }
    write_distribution_row(dist, "all", corpus::class_distribution(corpus));
  }
  run.finish();
  out << "split " << corpus.size() << " records into " << parts.dev.size()
      << "/" << parts.train.size() << "/" << parts.test.size() << "\n";
  return kExitOk;
}

struct PreprocessArgs {
  Common common;
  PrepFlags prep;
  std::string input;
};

int cmd_preprocess(const PreprocessArgs& a, std::ostream& out) {
  const auto corpus = load_corpus_input(a.input);
  const auto prep = build_prep(a.prep, a.common);
  const fs::path dir = prepare_out(a.common);
  const auto docs = prep.pipeline(corpus);
  Run run("preprocess", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.config = prep.config;
  {
    auto f = run.create("docs.jsonl");
    write_docs(f, docs, prep.pipeline.options.mode);
  }
  run.finish();
  out << "preprocessed " << docs.size() << " documents\n";
  return kExitOk;
}

// ---- profiling ----------------------------------------------------------

struct ProfileArgs {
  Common common;
  PrepFlags prep;
  std::string input;
  std::size_t top = 0;
  std::optional<double> ratio;
  std::int64_t min_difference = 0;
  std::string filters_dir;
  bool apply_filters = false;
  bool drop_names = false;
  std::string window = "10";
  std::string categories;
  double margin = 5.0;
  std::string margin_mode = "count";
  std::size_t chart_rows = 20;
};

std::optional<ngram::KeywordFilterRules> filter_rules(const ProfileArgs& a,
                                                      Run& run) {
  if (a.filters_dir.empty() && !a.apply_filters) return std::nullopt;
  const fs::path dir =
      a.filters_dir.empty() ? data_dir(a.common) / "filters" : fs::path(a.filters_dir);
  if (!fs::is_directory(dir)) {
    throw ConfigError("filter directory not found: " + dir.string());
  }
  run.manifest.config["filters"] = "on";
  run.manifest.config["keep_names"] = a.drop_names ? "false" : "true";
  return ngram::KeywordFilterRules::load(dir, !a.drop_names);
}

template <typename Key>
void write_distinct_csv(std::ostream& out,
                        const std::vector<ngram::DistinctKeyword<Key>>& rows) {
  csv::write_row(out, {"key", "own_count", "other_count", "difference", "ratio"});
  for (const auto& r : rows) {
    csv::write_row(out, {ngram::key_string(r.key), std::to_string(r.own_count),
                         std::to_string(r.other_count),
                         std::to_string(r.difference), num(r.ratio)});
  }
}

template <typename Key>
void write_matched_csv(std::ostream& out,
                       const std::vector<ngram::MatchedKey<Key>>& rows) {
  csv::write_row(out, {"key", "count_left", "count_right"});
  for (const auto& r : rows) {
    csv::write_row(out, {ngram::key_string(r.key), std::to_string(r.count_a),
                         std::to_string(r.count_b)});
  }
}

template <typename Key>
std::vector<ChartRow> matched_rows(const std::vector<ngram::MatchedKey<Key>>& rows,
                                   std::size_t limit) {
  std::vector<ChartRow> out;
  for (const auto& r : rows) {
    if (out.size() >= limit) break;
    out.push_back({ngram::key_string(r.key),
                   {static_cast<double>(r.count_a), static_cast<double>(r.count_b)}});
  }
  return out;
}

template <typename Key>
std::vector<ChartRow> distinct_rows(
    const std::vector<ngram::DistinctKeyword<Key>>& rows, std::size_t limit) {
  std::vector<ChartRow> out;
  for (const auto& r : rows) {
    if (out.size() >= limit) break;
    out.push_back({ngram::key_string(r.key), {static_cast<double>(r.difference)}});
  }
  return out;
}

template <typename Table>
void profile_tables(const ProfileArgs& a, Run& run, const Table& left,
                    const Table& right, std::size_t top, double ratio,
                    const char* what) {
  const auto rules = filter_rules(a, run);
  const auto matched = ngram::matched_comparison(left, right, top);
  {
    auto f = run.create("matched.csv");
    write_matched_csv(f, matched);
  }
  run.chart("matched.svg", matched_rows(matched, a.chart_rows), ChartKind::GroupedBar,
            {std::string("Most frequent ") + what + " in both parties",
             {"left", "right"}});
  for (const bool is_left : {true, false}) {
    auto distinct = ngram::distinct_keywords(is_left ? left : right,
                                             is_left ? right : left, ratio,
                                             a.min_difference);
    if (rules) distinct = ngram::apply_keyword_filters(distinct, *rules);
    const std::string side = is_left ? "left" : "right";
    {
      auto f = run.create("distinct_" + side + ".csv");
      write_distinct_csv(f, distinct);
    }
    run.chart("distinct_" + side + ".svg", distinct_rows(distinct, a.chart_rows),
              ChartKind::DiffBar,
              {std::string("Distinct ") + what + ": " + side, {"difference"}});
  }
}

std::pair<std::vector<TokenizedDoc>, std::vector<TokenizedDoc>> by_party(
    const std::vector<TokenizedDoc>& docs) {
  return {textprep::select_label(docs, corpus::Stance::Left),
          textprep::select_label(docs, corpus::Stance::Right)};
}

int cmd_profile_bow(const ProfileArgs& a, std::ostream& out) {
  const auto prep = build_prep(a.prep, a.common);
  const auto docs = load_docs_input(a.input, prep);
  const fs::path dir = prepare_out(a.common);
  Run run("profile bow", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.config = prep.config;
  const std::size_t top = a.top ? a.top : 60;
  const double ratio = a.ratio.value_or(5.0);
  run.manifest.config["top"] = std::to_string(top);
  run.manifest.config["ratio"] = num(ratio);
  run.manifest.config["min_difference"] = std::to_string(a.min_difference);

  const auto [left_docs, right_docs] = by_party(docs);
  auto left = ngram::bow_counts(left_docs);
  auto right = ngram::bow_counts(right_docs);
  left.party = corpus::Stance::Left;
  right.party = corpus::Stance::Right;
  {
    auto f = run.create("freq_left.csv");
    ngram::write_table_csv(f, left);
  }
  {
    auto f = run.create("freq_right.csv");
    ngram::write_table_csv(f, right);
  }
  profile_tables(a, run, left, right, top, ratio, "words");
  run.finish();
  out << "profiled " << left_docs.size() << " left and " << right_docs.size()
      << " right documents\n";
  return kExitOk;
}

int cmd_profile_bigram(const ProfileArgs& a, std::ostream& out) {
  const auto prep = build_prep(a.prep, a.common, /*default_drop_hashtags=*/true);
  const auto docs = load_docs_input(a.input, prep);
  const fs::path dir = prepare_out(a.common);
  Run run("profile bigram", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.config = prep.config;
  const std::size_t top = a.top ? a.top : 50;
  const double ratio = a.ratio.value_or(2.0);
  run.manifest.config["top"] = std::to_string(top);
  run.manifest.config["ratio"] = num(ratio);
  run.manifest.config["min_difference"] = std::to_string(a.min_difference);

  const auto [left_docs, right_docs] = by_party(docs);
  auto left = ngram::bigram_counts(left_docs);
  auto right = ngram::bigram_counts(right_docs);
  left.party = corpus::Stance::Left;
  right.party = corpus::Stance::Right;
  {
    auto f = run.create("bigram_left.csv");
    ngram::write_table_csv(f, left);
  }
  {
    auto f = run.create("bigram_right.csv");
    ngram::write_table_csv(f, right);
  }
  profile_tables(a, run, left, right, top, ratio, "bigrams");
  run.finish();
  out << "profiled " << left.counts.size() << " left and " << right.counts.size()
      << " right distinct bigrams\n";
  return kExitOk;
}

tfidf::TfidfConfig window_config(const std::string& window) {
  tfidf::TfidfConfig cfg;
  if (window == "all") {
    cfg.whole_corpus = true;
  } else {
    std::size_t n = 0;
    const auto [ptr, ec] =
        std::from_chars(window.data(), window.data() + window.size(), n);
    if (ec != std::errc{} || ptr != window.data() + window.size()) {
      throw ConfigError("--window must be a positive integer or 'all'");
    }
    cfg.window_size = n;
  }
  cfg.validate();
  return cfg;
}

int cmd_profile_tfidf(const ProfileArgs& a, std::ostream& out) {
  const auto prep = build_prep(a.prep, a.common);
  const auto cfg = window_config(a.window);
  tfidf::MarginMode margin_mode;
  if (a.margin_mode == "count") {
    margin_mode = tfidf::MarginMode::RepetitionCount;
  } else if (a.margin_mode == "score") {
    margin_mode = tfidf::MarginMode::ScoreSum;
  } else {
    throw ConfigError("--margin-mode must be count or score");
  }
  const std::string categories_path =
      a.categories.empty() ? (data_dir(a.common) / "categories.tsv").string()
                           : a.categories;
  require_file(categories_path, "category map");
  const auto categories = tfidf::load_category_map(categories_path);
  auto docs = load_docs_input(a.input, prep);
  const auto loaded = docs.size();
  // Documents left empty by cleaning have no word to score.
  std::erase_if(docs, [](const TokenizedDoc& d) { return d.tokens.empty(); });
  const fs::path dir = prepare_out(a.common);

  Run run("profile tfidf", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.add_input(categories_path);
  run.manifest.config = prep.config;
  run.manifest.config["window"] = a.window;
  run.manifest.config["margin"] = num(a.margin);
  run.manifest.config["margin_mode"] = a.margin_mode;
  const std::size_t top = a.top ? a.top : 20;
  run.manifest.config["top"] = std::to_string(top);

  std::stable_sort(docs.begin(), docs.end(), [](const TokenizedDoc& x, const TokenizedDoc& y) {
    return x.timestamp < y.timestamp;
  });
  const auto [left_docs, right_docs] = by_party(docs);
  const auto left_records = tfidf::chronological_pass(left_docs, right_docs, cfg);
  const auto right_records = tfidf::chronological_pass(right_docs, left_docs, cfg);
  const auto left_all = tfidf::top_repeated(left_records, left_records.size());
  const auto right_all = tfidf::top_repeated(right_records, right_records.size());
  const std::vector<tfidf::RepeatedWord> left_top(
      left_all.begin(), left_all.begin() + static_cast<std::ptrdiff_t>(std::min(top, left_all.size())));
  const std::vector<tfidf::RepeatedWord> right_top(
      right_all.begin(), right_all.begin() + static_cast<std::ptrdiff_t>(std::min(top, right_all.size())));
  {
    auto f = run.create("maxtfidf_left.csv");
    tfidf::write_records_csv(f, left_records);
  }
  {
    auto f = run.create("maxtfidf_right.csv");
    tfidf::write_records_csv(f, right_records);
  }
  {
    auto f = run.create("top_repeated_left.csv");
    tfidf::write_top_repeated_csv(f, left_top, categories);
  }
  {
    auto f = run.create("top_repeated_right.csv");
    tfidf::write_top_repeated_csv(f, right_top, categories);
  }
  const auto distinct_left =
      tfidf::distinct_repeated(left_all, right_all, a.margin, margin_mode);
  const auto distinct_right =
      tfidf::distinct_repeated(right_all, left_all, a.margin, margin_mode);
  {
    auto f = run.create("distinct_tfidf.csv");
    csv::write_row(f, {"party", "word", "own", "other", "difference"});
    for (const auto& [party, list] :
         {std::pair{"left", &distinct_left}, std::pair{"right", &distinct_right}}) {
      for (const auto& d : *list) {
        csv::write_row(f, {party, d.word, num(d.own), num(d.other), num(d.difference)});
      }
    }
  }

  std::map<std::string, std::pair<double, double>> union_counts;
  for (const auto& w : left_top) union_counts[w.word].first = static_cast<double>(w.count);
  for (const auto& w : right_top) union_counts[w.word].second = static_cast<double>(w.count);
  for (const auto& w : left_all) {
    if (auto it = union_counts.find(w.word); it != union_counts.end()) {
      it->second.first = static_cast<double>(w.count);
    }
  }
  for (const auto& w : right_all) {
    if (auto it = union_counts.find(w.word); it != union_counts.end()) {
      it->second.second = static_cast<double>(w.count);
    }
  }
  std::vector<ChartRow> repeated_rows;
  for (const auto& [word, counts] : union_counts) {
    repeated_rows.push_back({word, {counts.first, counts.second}});
  }
  run.chart("top_repeated.svg", repeated_rows, ChartKind::GroupedBar,
            {"Most repeated max TF-IDF words", {"left", "right"}});
  std::vector<ChartRow> diff_rows;
  for (const auto& d : distinct_left) {
    if (diff_rows.size() >= a.chart_rows) break;
    diff_rows.push_back({d.word, {d.difference}});
  }
  std::size_t right_rows = 0;
  for (const auto& d : distinct_right) {
    if (right_rows++ >= a.chart_rows) break;
    diff_rows.push_back({d.word, {-d.difference}});
  }
  run.chart("distinct_tfidf.svg", diff_rows, ChartKind::DiffBar,
            {"Distinct max TF-IDF words (left positive, right negative)", {"difference"}});
  run.finish();
  out << "max TF-IDF records: " << left_records.size() << " left, "
      << right_records.size() << " right\n";
  if (loaded != docs.size()) {
    out << "skipped " << loaded - docs.size() << " empty documents\n";
  }
  return kExitOk;
}

// ---- distinct over existing frequency tables -----------------------------

struct DistinctArgs {
  Common common;
  std::string own;
  std::string other;
  double ratio = 5.0;
  std::int64_t min_difference = 0;
  std::string filters_dir;
  bool apply_filters = false;
  bool drop_names = false;
  std::size_t chart_rows = 20;
};

int cmd_distinct(const DistinctArgs& a, std::ostream& out) {
  require_file(a.own, "own table");
  require_file(a.other, "other table");
  if (!(a.ratio > 1.0)) throw ConfigError("--ratio must exceed 1");
  std::ifstream own_in(a.own, std::ios::binary);
  std::ifstream other_in(a.other, std::ios::binary);
  const auto own = ngram::read_table_csv(own_in);
  const auto other = ngram::read_table_csv(other_in);
  const fs::path dir = prepare_out(a.common);
  Run run("distinct", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.own);
  run.manifest.add_input(a.other);
  run.manifest.config["ratio"] = num(a.ratio);
  run.manifest.config["min_difference"] = std::to_string(a.min_difference);
  auto distinct = ngram::distinct_keywords(own, other, a.ratio, a.min_difference);
  if (!a.filters_dir.empty() || a.apply_filters) {
    const fs::path fdir = a.filters_dir.empty() ? data_dir(a.common) / "filters"
                                                : fs::path(a.filters_dir);
    if (!fs::is_directory(fdir)) {
      throw ConfigError("filter directory not found: " + fdir.string());
    }
    distinct = ngram::apply_keyword_filters(
        distinct, ngram::KeywordFilterRules::load(fdir, !a.drop_names));
    run.manifest.config["filters"] = "on";
    run.manifest.config["keep_names"] = a.drop_names ? "false" : "true";
  }
  {
    auto f = run.create("distinct.csv");
    write_distinct_csv(f, distinct);
  }
  run.chart("distinct.svg", distinct_rows(distinct, a.chart_rows), ChartKind::DiffBar,
            {"Distinct keywords", {"difference"}});
  run.finish();
  out << distinct.size() << " distinct keywords\n";
  return kExitOk;
}

// ---- classification -------------------------------------------------------

struct TrainArgs {
  Common common;
  PrepFlags prep;
  std::string input;
  std::string classifier = "svm";
  std::string vectorizer = "count";
  std::string ngram = "unigram";
  double alpha = 1.0;
  double lambda = 1e-4;
  std::size_t epochs = 20;
};

classify::TrainConfig train_config(const TrainArgs& a, std::uint64_t seed) {
  classify::TrainConfig cfg;
  const auto kind = classify::parse_classifier(a.classifier);
  if (!kind) throw ConfigError("unknown classifier '" + a.classifier + "'");
  const auto vec = classify::parse_vectorizer(a.vectorizer);
  if (!vec) throw ConfigError("unknown vectorizer '" + a.vectorizer + "'");
  const auto range = classify::parse_ngram_range(a.ngram);
  if (!range) throw ConfigError("unknown n-gram range '" + a.ngram + "'");
  cfg.classifier = *kind;
  cfg.vectorizer = *vec;
  cfg.range = *range;
  cfg.cleaning = mode_of(a.prep.mode);
  if (!(a.alpha > 0.0)) throw ConfigError("--alpha must be positive");
  cfg.alpha = a.alpha;
  cfg.svm.lambda = a.lambda;
  cfg.svm.epochs = a.epochs;
  cfg.svm.seed = seed;
  cfg.svm.validate();
  return cfg;
}

int cmd_train(const TrainArgs& a, std::ostream& out) {
  const auto prep = build_prep(a.prep, a.common);
  const std::uint64_t seed = resolve_seed(a.common.seed);
  const auto cfg = train_config(a, seed);
  const auto docs = load_docs_input(a.input, prep);
  const fs::path dir = prepare_out(a.common);
  const auto model = classify::StanceClassifier::train(docs, cfg);
  Run run("train", seed, dir);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.config = prep.config;
  run.manifest.config["classifier"] = std::string(classify::classifier_name(cfg.classifier));
  run.manifest.config["vectorizer"] = std::string(classify::vectorizer_name(cfg.vectorizer));
  run.manifest.config["ngram"] = classify::ngram_range_name(cfg.range);
  run.manifest.config["alpha"] = num(cfg.alpha);
  run.manifest.config["lambda"] = num(cfg.svm.lambda);
  run.manifest.config["epochs"] = std::to_string(cfg.svm.epochs);
  {
    auto f = run.create("model.json");
    classify::save_model(f, model);
  }
  run.finish();
  out << "trained " << classify::classifier_name(cfg.classifier) << " on "
      << docs.size() << " documents, " << model.features.dimension()
      << " features\n";
  return kExitOk;
}

struct EvalArgs {
  Common common;
  PrepFlags prep;
  std::string model;
  std::string input;
  std::string predictions;
};

Prep prep_for_model(const PrepFlags& flags, const Common& c,
                    const classify::StanceClassifier& model) {
  PrepFlags f = flags;
  f.mode = std::string(textprep::mode_name(model.config.cleaning));
  return build_prep(f, c);
}

classify::StanceClassifier load_model_input(const std::string& path) {
  require_file(path, "model");
  return classify::load_model(fs::path(path));
}

corpus::Stance parse_stance_field(const std::string& s, std::size_t line) {
  if (s == "1" || s == "+1" || s == "left") return corpus::Stance::Left;
  if (s == "-1" || s == "right") return corpus::Stance::Right;
  throw SchemaError("bad label '" + s + "' at line " + std::to_string(line));
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const fs::path dir_check = a.common.out_dir;
  std::vector<corpus::Stance> gold;
  std::vector<corpus::Stance> predicted;
  std::vector<std::string> ids;
  std::vector<double> scores;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> config;

  if (!a.predictions.empty()) {
    if (!a.model.empty() || !a.input.empty()) {
      throw ConfigError("--predictions cannot be combined with a model or input");
    }
    require_file(a.predictions, "predictions");
    std::ifstream in(a.predictions, std::ios::binary);
    csv::Reader reader(in);
    const auto header = reader.next();
    if (!header) throw SchemaError("predictions file is empty");
    const auto col = [&](const char* name) {
      const auto it = std::find(header->fields.begin(), header->fields.end(), name);
      if (it == header->fields.end()) {
        throw SchemaError(std::string("predictions lack column '") + name + "'");
      }
      return static_cast<std::size_t>(it - header->fields.begin());
    };
    const std::size_t gi = col("gold");
    const std::size_t pi = col("predicted");
    while (auto row = reader.next()) {
      if (row->fields.size() != header->fields.size()) {
        throw SchemaError("malformed predictions row at line " +
                          std::to_string(row->line));
      }
      gold.push_back(parse_stance_field(row->fields[gi], row->line));
      predicted.push_back(parse_stance_field(row->fields[pi], row->line));
    }
    inputs.push_back(a.predictions);
    config["source"] = "predictions";
  } else {
    if (a.model.empty() || a.input.empty()) {
      throw ConfigError("eval needs --model and an input, or --predictions");
    }
    const auto model = load_model_input(a.model);
    const auto prep = prep_for_model(a.prep, a.common, model);
    const auto docs = load_docs_input(a.input, prep);
    for (const auto& d : docs) {
      ids.push_back(d.source_id);
      gold.push_back(d.label);
      const double s = model.decision_score(d);
      scores.push_back(s);
      predicted.push_back(model.predict(d));
    }
    inputs = {a.model, a.input};
    for (const auto& r : prep.resources) inputs.push_back(r.string());
    config = prep.config;
    config["source"] = "model";
  }
  if (gold.empty()) throw ValidationError("nothing to evaluate");
  const fs::path dir = prepare_out(a.common);
  const auto report = classify::evaluate(predicted, gold);
  Run run("eval", resolve_seed(a.common.seed), dir);
  for (const auto& i : inputs) run.manifest.add_input(i);
  run.manifest.config = config;
  {
    auto f = run.create("report.csv");
    classify::write_report_csv(f, report);
  }
  {
    auto f = run.create("confusion.csv");
    classify::write_confusion_csv(f, report);
  }
  if (!ids.empty()) {
    auto f = run.create("predictions.csv");
    csv::write_row(f, {"id", "gold", "predicted", "score"});
    for (std::size_t i = 0; i < ids.size(); ++i) {
      csv::write_row(f, {ids[i], std::to_string(corpus::stance_value(gold[i])),
                         std::to_string(corpus::stance_value(predicted[i])),
                         num(scores[i])});
    }
  }
  run.finish();
  out << "accuracy " << format_fixed(report.accuracy, 4) << " on "
      << report.total() << " documents\n";
  return kExitOk;
}

struct GridArgs {
  Common common;
  PrepFlags prep;
  std::string train;
  std::string test;
  std::vector<std::string> cleanings{"stem", "lemma"};
  std::vector<std::string> ngrams{"unigram", "unigram+bigram"};
  std::vector<std::string> vectorizers{"count", "tfidf"};
  std::vector<std::string> classifiers{"nb", "svm"};
  double alpha = 1.0;
  double lambda = 1e-4;
  std::size_t epochs = 20;
  bool sequential = false;
};

int cmd_grid(const GridArgs& a, std::ostream& out) {
  require_file(a.train, "train input");
  require_file(a.test, "test input");
  const std::uint64_t seed = resolve_seed(a.common.seed);
  classify::GridSpec spec;
  spec.ranges.clear();
  for (const auto& n : a.ngrams) {
    const auto r = classify::parse_ngram_range(n);
    if (!r) throw ConfigError("unknown n-gram range '" + n + "'");
    spec.ranges.push_back(*r);
  }
  spec.vectorizers.clear();
  for (const auto& v : a.vectorizers) {
    const auto k = classify::parse_vectorizer(v);
    if (!k) throw ConfigError("unknown vectorizer '" + v + "'");
    spec.vectorizers.push_back(*k);
  }
  spec.classifiers.clear();
  for (const auto& c : a.classifiers) {
    const auto k = classify::parse_classifier(c);
    if (!k) throw ConfigError("unknown classifier '" + c + "'");
    spec.classifiers.push_back(*k);
  }
  spec.alpha = a.alpha;
  spec.svm.lambda = a.lambda;
  spec.svm.epochs = a.epochs;
  spec.svm.seed = seed;
  spec.svm.validate();
  spec.parallel = !a.sequential;

  std::vector<classify::CleanedSplit> splits;
  std::vector<fs::path> resources;
  const auto train_corpus = load_corpus_input(a.train);
  const auto test_corpus = load_corpus_input(a.test);
  std::string cleaning_names;
  for (const auto& name : a.cleanings) {
    PrepFlags f = a.prep;
    f.mode = name;
    const auto prep = build_prep(f, a.common);
    splits.push_back({prep.pipeline.options.mode, prep.pipeline(train_corpus),
                      prep.pipeline(test_corpus)});
    for (const auto& r : prep.resources) {
      if (std::find(resources.begin(), resources.end(), r) == resources.end()) {
        resources.push_back(r);
      }
    }
    cleaning_names += (cleaning_names.empty() ? "" : ",") + name;
  }
  if (splits.empty()) throw ConfigError("no cleaning modes selected");
  const fs::path dir = prepare_out(a.common);
  const auto cells = classify::run_grid(splits, spec);

  Run run("grid", seed, dir);
  run.manifest.add_input(a.train);
  run.manifest.add_input(a.test);
  for (const auto& r : resources) run.manifest.add_input(r);
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  run.manifest.config["cleanings"] = cleaning_names;
  run.manifest.config["ngrams"] = join(a.ngrams);
  run.manifest.config["vectorizers"] = join(a.vectorizers);
  run.manifest.config["classifiers"] = join(a.classifiers);
  run.manifest.config["alpha"] = num(a.alpha);
  run.manifest.config["lambda"] = num(a.lambda);
  run.manifest.config["epochs"] = std::to_string(a.epochs);
  for (const auto v : spec.vectorizers) {
    auto f = run.create("grid_" + std::string(classify::vectorizer_name(v)) + ".csv");
    classify::write_grid_accuracy_csv(f, cells, v);
  }
  {
    auto f = run.create("grid_metrics.csv");
    classify::write_grid_metrics_csv(f, cells);
  }
  {
    auto f = run.create("grid_confusion.csv");
    classify::write_grid_confusion_csv(f, cells);
  }
  run.finish();
  for (const auto& c : cells) {
    out << textprep::mode_name(c.cleaning) << ' '
        << classify::ngram_range_name(c.range) << ' '
        << classify::vectorizer_name(c.vectorizer) << ' '
        << classify::classifier_name(c.classifier) << " accuracy "
        << format_fixed(c.report.accuracy, 4) << '\n';
  }
  return kExitOk;
}

struct ExplainArgs {
  Common common;
  PrepFlags prep;
  std::string model;
  std::string input;
  bool all = false;
  std::size_t top = 0;
};

int cmd_explain(const ExplainArgs& a, std::ostream& out) {
  const auto model = load_model_input(a.model);
  const auto prep = prep_for_model(a.prep, a.common, model);
  const auto docs = load_docs_input(a.input, prep);
  const fs::path dir = prepare_out(a.common);
  Run run("explain", resolve_seed(a.common.seed), dir);
  run.manifest.add_input(a.model);
  run.manifest.add_input(a.input);
  for (const auto& r : prep.resources) run.manifest.add_input(r);
  run.manifest.config = prep.config;
  run.manifest.config["scope"] = a.all ? "all" : "misclassified";
  run.manifest.config["top"] = std::to_string(a.top);
  std::size_t explained = 0;
  {
    auto f = run.create("explain.csv");
    classify::write_explanation_header(f);
    for (const auto& d : docs) {
      auto e = classify::explain(model, d);
      if (!a.all && e.predicted == d.label) continue;
      if (a.top && e.rows.size() > a.top) e.rows.resize(a.top);
      classify::write_explanation_rows(f, d, e);
      ++explained;
    }
  }
  run.finish();
  out << "explained " << explained << " of " << docs.size() << " documents\n";
  return kExitOk;
}

// ---- synthetic corpora and charts -----------------------------------------

struct SynthArgs {
  Common common;
  std::size_t n = 2000;
  double left_fraction = 0.553;
  double party_weight = 4.0;
  std::size_t min_length = 8;
  std::size_t max_length = 16;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(a.common.seed);
  if (a.party_weight < 0.0) throw ConfigError("--party-weight must be >= 0");
  auto spec = SyntheticSpec::standard(seed, a.party_weight);
  spec.n_tweets = a.n;
  spec.left_fraction = a.left_fraction;
  spec.min_length = a.min_length;
  spec.max_length = a.max_length;
  const auto corpus = generate_synthetic(spec);
  const fs::path dir = prepare_out(a.common);
  Run run("synth", seed, dir);
  run.manifest.config["n"] = std::to_string(a.n);
  run.manifest.config["left_fraction"] = num(a.left_fraction);
  run.manifest.config["party_weight"] = num(a.party_weight);
  run.manifest.config["length"] =
      std::to_string(a.min_length) + "-" + std::to_string(a.max_length);
  {
    auto f = run.create("synthetic.jsonl");
    write_raw_jsonl(f, corpus);
  }
  run.finish();
  const auto dist = corpus::class_distribution(corpus);
  out << "generated " << corpus.size() << " tweets (" << dist.left << " left, "
      << dist.right << " right)\n";
  return kExitOk;
}

struct ChartArgs {
  Common common;
  std::string input;
  std::string kind = "grouped_bar";
  std::string title;
  std::string output;
};

int cmd_chart(const ChartArgs& a, std::ostream& out) {
  require_file(a.input, "input");
  const ChartKind kind = parse_chart_kind(a.kind);
  if (a.output.empty()) throw ConfigError("--out file is required");
  std::ifstream in(a.input, std::ios::binary);
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header || header->fields.size() < 2) {
    throw SchemaError("chart input needs a label column and value columns");
  }
  const std::size_t want = kind == ChartKind::DiffBar ? 1 : header->fields.size() - 1;
  std::vector<ChartRow> rows;
  while (auto row = reader.next()) {
    if (row->fields.size() != header->fields.size()) {
      throw SchemaError("malformed chart row at line " + std::to_string(row->line));
    }
    ChartRow r{row->fields[0], {}};
    for (std::size_t i = 1; i <= want; ++i) {
      const std::string& s = row->fields[i];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw SchemaError("non-numeric chart value '" + s + "' at line " +
                          std::to_string(row->line));
      }
      r.values.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  ChartOptions options;
  options.title = a.title;
  options.series.assign(header->fields.begin() + 1, header->fields.end());
  const fs::path target(a.output);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  emit_chart(rows, kind, target, options);
  Run run("chart", resolve_seed(a.common.seed),
          target.has_parent_path() ? target.parent_path() : fs::path("."));
  run.manifest.add_input(a.input);
  run.manifest.config["kind"] = a.kind;
  run.manifest.config["title"] = a.title;
  run.files.push_back(target.filename().string());
  run.finish(target.filename().string() + ".manifest.json");
  out << "wrote " << rows.size() << " bars to " << a.output << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"stancecraft: political stance profiling and classification"};
  app.name("stancecraft");
  app.set_version_flag("--version", STANCECRAFT_VERSION);
  app.set_config("--config", "", "INI configuration file; flags override it");
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* s_ingest = app.add_subcommand("ingest", "Load a raw tweet export");
  s_ingest->add_option("input", ingest.input, "JSONL or CSV export")->required();
  s_ingest->add_option("--format", ingest.format, "jsonl or csv (default: by extension)");
  s_ingest->add_option("--from", ingest.from, "Earliest accepted date");
  s_ingest->add_option("--to", ingest.to, "Latest accepted date");
  s_ingest->add_option("--provenance", ingest.provenance, "Provenance note");
  add_common(s_ingest, ingest.common);

  FilterArgs filter;
  auto* s_filter = app.add_subcommand("filter", "Keep COVID-related tweets");
  s_filter->add_option("input", filter.input, "Corpus file")->required();
  s_filter->add_option("--terms", filter.terms, "Filter terms")->delimiter(',');
  s_filter->add_flag("--terms-default", filter.terms_default, "Use the built-in term list");
  add_common(s_filter, filter.common);

  PreprocessArgs preprocess;
  auto* s_pre = app.add_subcommand("preprocess", "Tokenize, clean and normalize");
  s_pre->add_option("input", preprocess.input, "Corpus file")->required();
  add_prep(s_pre, preprocess.prep);
  add_common(s_pre, preprocess.common);

  SplitArgs split;
  auto* s_split = app.add_subcommand("split", "Shuffle into dev/train/test");
  s_split->add_option("input", split.input, "Corpus file")->required();
  s_split->add_option("--dev", split.dev, "Dev fraction");
  s_split->add_option("--train", split.train, "Train fraction");
  s_split->add_option("--test", split.test, "Test fraction");
  s_split->add_flag("--lenient", split.lenient, "Allow corpora with fewer than 3 records");
  add_common(s_split, split.common);

  ProfileArgs profile;
  auto* s_profile = app.add_subcommand("profile", "Party vocabulary profiles");
  s_profile->require_subcommand(1);
  auto* p_bow = s_profile->add_subcommand("bow", "Word frequency profile");
  auto* p_bigram = s_profile->add_subcommand("bigram", "Bigram profile");
  auto* p_tfidf = s_profile->add_subcommand("tfidf", "Windowed max TF-IDF profile");
  for (auto* p : {p_bow, p_bigram, p_tfidf}) {
    p->add_option("input", profile.input, "Corpus or documents file")->required();
    p->add_option("--top", profile.top, "Number of top keys");
    p->add_option("--chart-rows", profile.chart_rows, "Rows per chart");
    add_prep(p, profile.prep);
    add_common(p, profile.common);
  }
  for (auto* p : {p_bow, p_bigram}) {
    p->add_option("--ratio", profile.ratio, "Distinctness ratio threshold");
    p->add_option("--min-diff", profile.min_difference, "Minimum count difference");
    p->add_option("--filters", profile.filters_dir, "Keyword filter directory");
    p->add_flag("--apply-filters", profile.apply_filters, "Use the default keyword filters");
    p->add_flag("--drop-names", profile.drop_names, "Filter politician names too");
  }
  p_tfidf->add_option("--window", profile.window, "Opposing window size, or 'all'");
  p_tfidf->add_option("--categories", profile.categories, "Category map TSV");
  p_tfidf->add_option("--margin", profile.margin, "Distinct repetition margin");
  p_tfidf->add_option("--margin-mode", profile.margin_mode, "count or score");

  DistinctArgs distinct;
  auto* s_distinct = app.add_subcommand("distinct", "Distinct keywords from two tables");
  s_distinct->add_option("--own", distinct.own, "Own frequency table CSV")->required();
  s_distinct->add_option("--other", distinct.other, "Other frequency table CSV")->required();
  s_distinct->add_option("--ratio", distinct.ratio, "Ratio threshold");
  s_distinct->add_option("--min-diff", distinct.min_difference, "Minimum count difference");
  s_distinct->add_option("--filters", distinct.filters_dir, "Keyword filter directory");
  s_distinct->add_flag("--apply-filters", distinct.apply_filters, "Use the default keyword filters");
  s_distinct->add_flag("--drop-names", distinct.drop_names, "Filter politician names too");
  s_distinct->add_option("--chart-rows", distinct.chart_rows, "Rows in the chart");
  add_common(s_distinct, distinct.common);

  TrainArgs train;
  auto* s_train = app.add_subcommand("train", "Train a stance classifier");
  s_train->add_option("input", train.input, "Training corpus or documents")->required();
  s_train->add_option("--classifier", train.classifier, "nb or svm");
  s_train->add_option("--vectorizer", train.vectorizer, "count or tfidf");
  s_train->add_option("--ngram", train.ngram, "unigram, unigram+bigram or bigram");
  s_train->add_option("--alpha", train.alpha, "Naive Bayes smoothing");
  s_train->add_option("--lambda", train.lambda, "SVM regularization");
  s_train->add_option("--epochs", train.epochs, "SVM epochs");
  add_prep(s_train, train.prep);
  add_common(s_train, train.common);

  EvalArgs eval;
  auto* s_eval = app.add_subcommand("eval", "Evaluate a model or a predictions file");
  s_eval->add_option("input", eval.input, "Test corpus or documents");
  s_eval->add_option("--model", eval.model, "Model file");
  s_eval->add_option("--predictions", eval.predictions, "CSV with gold and predicted columns");
  add_prep(s_eval, eval.prep);
  add_common(s_eval, eval.common);

  GridArgs grid;
  auto* s_grid = app.add_subcommand("grid", "Run the classification grid");
  s_grid->add_option("--train", grid.train, "Training corpus")->required();
  s_grid->add_option("--test", grid.test, "Test corpus")->required();
  s_grid->add_option("--cleanings", grid.cleanings, "Cleaning modes")->delimiter(',');
  s_grid->add_option("--ngrams", grid.ngrams, "N-gram ranges")->delimiter(',');
  s_grid->add_option("--vectorizers", grid.vectorizers, "Vectorizers")->delimiter(',');
  s_grid->add_option("--classifiers", grid.classifiers, "Classifiers")->delimiter(',');
  s_grid->add_option("--alpha", grid.alpha, "Naive Bayes smoothing");
  s_grid->add_option("--lambda", grid.lambda, "SVM regularization");
  s_grid->add_option("--epochs", grid.epochs, "SVM epochs");
  s_grid->add_flag("--sequential", grid.sequential, "Run cells one at a time");
  add_prep(s_grid, grid.prep);
  add_common(s_grid, grid.common);

  ExplainArgs explain;
  auto* s_explain = app.add_subcommand("explain", "Per-feature contributions");
  s_explain->add_option("input", explain.input, "Corpus or documents")->required();
  s_explain->add_option("--model", explain.model, "Model file")->required();
  s_explain->add_flag("--all", explain.all, "Explain every document, not only errors");
  s_explain->add_option("--top", explain.top, "Rows per document (0 keeps all)");
  add_prep(s_explain, explain.prep);
  add_common(s_explain, explain.common);

  SynthArgs synth;
  auto* s_synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  s_synth->add_option("-n,--tweets", synth.n, "Number of tweets");
  s_synth->add_option("--left-fraction", synth.left_fraction, "Share of left tweets");
  s_synth->add_option("--party-weight", synth.party_weight,
                      "Weight of each party word; 0 removes party lexicons");
  s_synth->add_option("--min-length", synth.min_length, "Shortest tweet");
  s_synth->add_option("--max-length", synth.max_length, "Longest tweet");
  add_common(s_synth, synth.common);

  ChartArgs chart;
  auto* s_chart = app.add_subcommand("chart", "Render a CSV as an SVG bar chart");
  s_chart->add_option("input", chart.input, "CSV: label column then values")->required();
  s_chart->add_option("--kind", chart.kind, "grouped_bar or diff_bar");
  s_chart->add_option("--title", chart.title, "Chart title");
  s_chart->add_option("-o,--out", chart.output, "Output SVG file")->required();
  s_chart->add_option("--seed", chart.common.seed, "Recorded in the manifest");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*s_ingest) return cmd_ingest(ingest, out);
    if (*s_filter) return cmd_filter(filter, out);
    if (*s_pre) return cmd_preprocess(preprocess, out);
    if (*s_split) return cmd_split(split, out);
    if (*p_bow) return cmd_profile_bow(profile, out);
    if (*p_bigram) return cmd_profile_bigram(profile, out);
    if (*p_tfidf) return cmd_profile_tfidf(profile, out);
    if (*s_distinct) return cmd_distinct(distinct, out);
    if (*s_train) return cmd_train(train, out);
    if (*s_eval) return cmd_eval(eval, out);
    if (*s_grid) return cmd_grid(grid, out);
    if (*s_explain) return cmd_explain(explain, out);
    if (*s_synth) return cmd_synth(synth, out);
    if (*s_chart) return cmd_chart(chart, out);
  } catch (const ConfigError& e) {
    err << "stancecraft: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "stancecraft: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "stancecraft: no command given\n";
  return kExitUsage;
}

}  // namespace stancecraft::app
