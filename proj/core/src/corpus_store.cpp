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

#include "stancecraft/corpus_store.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "stancecraft/csv.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/rng.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::corpus {

using json = nlohmann::json;

std::optional<Party> parse_party(std::string_view code) {
  if (code == "D") return Party::D;
  if (code == "R") return Party::R;
  if (code == "NPP") return Party::NPP;
  return std::nullopt;
}

std::string_view party_code(Party party) {
  switch (party) {
    case Party::D:
      return "D";
    case Party::R:
      return "R";
    case Party::NPP:
      return "NPP";
  }
  return "D";
}

Stance stance_from_value(int value) {
  if (value == 1) return Stance::Left;
  if (value == -1) return Stance::Right;
  throw DomainError("stance label must be +1 or -1, got " +
                    std::to_string(value));
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "jsonl") return Format::Jsonl;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

namespace {

constexpr std::array<std::string_view, 6> kFields{
    "id", "date", "username", "party", "state", "content"};

using FieldValues = std::array<std::string, kFields.size()>;

// Validates one row's field values. Returns a reject reason on failure.
std::optional<std::string> build_record(const FieldValues& values,
                                        const IngestOptions& options,
                                        TweetRecord& out) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!is_valid_utf8(values[i])) {
      return "invalid UTF-8 in field '" + std::string(kFields[i]) + "'";
    }
  }
  if (values[0].empty()) return "empty id";
  const auto ts = parse_iso8601(values[1]);
  if (!ts) return "unparseable date '" + values[1] + "'";
  const auto party = parse_party(values[3]);
  if (!party) return "unknown party code '" + values[3] + "'";
  if ((options.from && *ts < *options.from) ||
      (options.to && *ts > *options.to)) {
    return "date " + format_iso8601(*ts) + " outside corpus range";
  }
  out.id = values[0];
  out.timestamp = *ts;
  out.username = values[2];
  out.party = *party;
  out.state = values[4];
  out.text = values[5];
  return std::nullopt;
}

std::optional<std::string> json_fields(const std::string& line,
                                       FieldValues& values) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    return std::string("malformed JSON: ") + e.what();
  }
  if (!obj.is_object()) return "record is not a JSON object";
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    const auto it = obj.find(std::string(kFields[i]));
    if (it == obj.end()) return "missing field '" + std::string(kFields[i]) + "'";
    if (!it->is_string()) {
      return "field '" + std::string(kFields[i]) + "' is not a string";
    }
    values[i] = it->get<std::string>();
  }
  return std::nullopt;
}

class IdRegistry {
 public:
  void add(const std::string& id, std::size_t line) {
    if (!seen_.insert(id).second) {
      throw ValidationError("duplicate id '" + id + "' at line " +
                            std::to_string(line));
    }
  }

 private:
  std::unordered_set<std::string> seen_;
};

IngestResult ingest_jsonl(std::istream& source, const IngestOptions& options) {
  IngestResult result;
  result.corpus.provenance = options.provenance;
  IdRegistry ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (!is_valid_utf8(line)) {
      result.rejects.push_back({line_no, "invalid UTF-8"});
      continue;
    }
    FieldValues values;
    TweetRecord record;
    if (auto err = json_fields(line, values)) {
      result.rejects.push_back({line_no, *err});
      continue;
    }
    if (auto err = build_record(values, options, record)) {
      result.rejects.push_back({line_no, *err});
      continue;
    }
    ids.add(record.id, line_no);
    result.corpus.records.push_back(std::move(record));
  }
  return result;
}

IngestResult ingest_csv(std::istream& source, const IngestOptions& options) {
  IngestResult result;
  result.corpus.provenance = options.provenance;
  csv::Reader reader(source);
  auto header = reader.next();
  if (!header) return result;
  if (!header->fields.empty() && header->fields[0].starts_with("\xEF\xBB\xBF")) {
    header->fields[0].erase(0, 3);
  }
  std::array<std::size_t, kFields.size()> column{};
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    const auto it = std::find(header->fields.begin(), header->fields.end(),
                              kFields[i]);
    if (it == header->fields.end()) {
      throw SchemaError("CSV header lacks column '" + std::string(kFields[i]) +
                        "'");
    }
    column[i] = static_cast<std::size_t>(it - header->fields.begin());
  }
  IdRegistry ids;
  while (auto row = reader.next()) {
    if (row->fields.size() == 1 && trim(row->fields[0]).empty()) continue;
    if (reader.last_malformed()) {
      result.rejects.push_back({row->line, "unterminated quoted field"});
      continue;
    }
    if (row->fields.size() != header->fields.size()) {
      result.rejects.push_back(
          {row->line, "expected " + std::to_string(header->fields.size()) +
                          " fields, found " +
                          std::to_string(row->fields.size())});
      continue;
    }
    FieldValues values;
    for (std::size_t i = 0; i < kFields.size(); ++i) {
      values[i] = row->fields[column[i]];
    }
    TweetRecord record;
    if (auto err = build_record(values, options, record)) {
      result.rejects.push_back({row->line, *err});
      continue;
    }
    ids.add(record.id, row->line);
    result.corpus.records.push_back(std::move(record));
  }
  return result;
}

json record_to_json(const TweetRecord& r) {
  json obj = json::object();
  obj["id"] = r.id;
  obj["date"] = format_iso8601(r.timestamp);
  obj["username"] = r.username;
  obj["party"] = std::string(party_code(r.party));
  obj["state"] = r.state;
  obj["content"] = r.text;
  return obj;
}

}  // namespace

IngestResult ingest(std::istream& source, Format format,
                    const IngestOptions& options) {
  return format == Format::Jsonl ? ingest_jsonl(source, options)
                                 : ingest_csv(source, options);
}

const std::vector<std::string>& default_covid_terms() {
  static const std::vector<std::string> terms{
      "covid",     "covid-19", "corona",   "coronavirus",
      "pandemic",  "sars-cov-2", "2019-ncov", "virus",
      "epidemic",  "flu",      "influenza", "cold"};
  return terms;
}

Corpus filter_covid(const Corpus& corpus,
                    const std::vector<std::string>& terms) {
  if (terms.empty()) throw ConfigError("COVID filter term list is empty");
  std::vector<std::string> lowered;
  lowered.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.empty()) throw ConfigError("COVID filter term list has an empty term");
    lowered.push_back(to_lower_ascii(t));
  }
  Corpus out;
  out.provenance = corpus.provenance;
  out.filter_terms_applied = lowered;
  for (const auto& record : corpus.records) {
    const std::string text = to_lower_ascii(record.text);
    const bool hit = std::any_of(lowered.begin(), lowered.end(),
                                 [&](const std::string& term) {
                                   return text.find(term) != std::string::npos;
                                 });
    if (hit) out.records.push_back(record);
  }
  return out;
}

void SplitSpec::validate() const {
  for (double f : {dev_fraction, train_fraction, test_fraction}) {
    if (!(f >= 0.0) || !std::isfinite(f)) {
      throw ConfigError("split fractions must be non-negative");
    }
  }
  const double sum = dev_fraction + train_fraction + test_fraction;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1, got " +
                      format_double(sum));
  }
}

namespace {

// floor(fraction * n), tolerant of the representation error in fractions
// such as 0.1.
std::size_t floored_share(double fraction, std::size_t n) {
  const double exact = fraction * static_cast<double>(n);
  return static_cast<std::size_t>(std::floor(exact + 1e-9));
}

}  // namespace

std::tuple<std::size_t, std::size_t, std::size_t> split_sizes(
    std::size_t n, const SplitSpec& spec) {
  const std::size_t dev = floored_share(spec.dev_fraction, n);
  const std::size_t test = floored_share(spec.test_fraction, n);
  return {dev, n - dev - test, test};
}

SplitResult split(const Corpus& corpus, const SplitSpec& spec) {
  spec.validate();
  const std::size_t n = corpus.size();
  if (n == 0) throw ConfigError("cannot split an empty corpus");
  if (spec.strict && n < 3) {
    throw ConfigError("cannot split " + std::to_string(n) +
                      " records into three parts");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  const auto [dev_n, train_n, test_n] = split_sizes(n, spec);
  SplitResult out;
  for (Corpus* part : {&out.dev, &out.train, &out.test}) {
    part->provenance = corpus.provenance;
    part->filter_terms_applied = corpus.filter_terms_applied;
  }
  out.dev.records.reserve(dev_n);
  out.train.records.reserve(train_n);
  out.test.records.reserve(test_n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& record = corpus.records[order[i]];
    if (i < dev_n) {
      out.dev.records.push_back(record);
    } else if (i < dev_n + train_n) {
      out.train.records.push_back(record);
    } else {
      out.test.records.push_back(record);
    }
  }
  return out;
}

ClassDistribution distribution_from_counts(std::size_t left,
                                           std::size_t right) {
  ClassDistribution dist;
  dist.left = left;
  dist.right = right;
  const std::size_t total = left + right;
  if (total == 0) return dist;
  auto percent = [total](std::size_t count) {
    // Integer rounding to tenths avoids double-rounding surprises.
    const std::size_t tenths = (count * 2000 + total) / (2 * total);
    return static_cast<double>(tenths) / 10.0;
  };
  dist.left_percent = percent(left);
  dist.right_percent = percent(right);
  return dist;
}

ClassDistribution class_distribution(const Corpus& corpus) {
  std::size_t left = 0;
  for (const auto& r : corpus.records) {
    if (r.label() == Stance::Left) ++left;
  }
  return distribution_from_counts(left, corpus.size() - left);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  json header = json::object();
  header["schema"] = kSchemaVersion;
  header["provenance"] = corpus.provenance;
  header["filter_terms"] = corpus.filter_terms_applied
                               ? json(*corpus.filter_terms_applied)
                               : json(nullptr);
  header["records"] = corpus.size();
  out << header.dump() << '\n';
  for (const auto& r : corpus.records) out << record_to_json(r).dump() << '\n';
}

Corpus read_corpus(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("corpus file is empty");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::parse_error&) {
    throw SchemaError("corpus header is not valid JSON");
  }
  if (!header.is_object() || !header.contains("schema")) {
    throw SchemaError("corpus header lacks a schema version");
  }
  if (header["schema"] != kSchemaVersion) {
    throw SchemaError("unsupported corpus schema " + header["schema"].dump());
  }
  Corpus corpus;
  try {
    corpus.provenance = header.value("provenance", std::string{});
    if (header.contains("filter_terms") && !header["filter_terms"].is_null()) {
      corpus.filter_terms_applied =
          header["filter_terms"].get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("corpus header malformed: ") + e.what());
  }
  const auto expected = header.value("records", std::size_t{0});

  IdRegistry ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    FieldValues values;
    if (auto err = json_fields(line, values)) {
      throw SchemaError("line " + std::to_string(line_no) + ": " + *err);
    }
    TweetRecord record;
    if (auto err = build_record(values, {}, record)) {
      throw SchemaError("line " + std::to_string(line_no) + ": " + *err);
    }
    ids.add(record.id, line_no);
    corpus.records.push_back(std::move(record));
  }
  if (corpus.size() != expected) {
    throw SchemaError("corpus truncated: header declares " +
                      std::to_string(expected) + " records, found " +
                      std::to_string(corpus.size()));
  }
  return corpus;
}

void persist(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_corpus(out, corpus);
  if (!out) throw IoError("write failed for " + path.string());
}

Corpus load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return read_corpus(in);
}

IngestResult load_any(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::string first;
  std::getline(in, first);
  bool persisted = false;
  try {
    const auto head = json::parse(first);
    persisted = head.is_object() && head.contains("schema");
  } catch (const json::parse_error&) {
  }
  in.clear();
  in.seekg(0);
  if (persisted) return {read_corpus(in), {}};
  const auto format =
      path.extension() == ".csv" ? Format::Csv : Format::Jsonl;
  IngestOptions options;
  options.provenance = path.filename().string();
  return ingest(in, format, options);
}

}  // namespace stancecraft::corpus
