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

#include <fstream>

#include "json.hpp"
#include "stancecraft/classifier.hpp"
#include "stancecraft/error.hpp"

namespace stancecraft::classify {

using json = nlohmann::json;

namespace {

constexpr const char* kFormatTag = "stancecraft-model";

json counts_to_json(const ngram::FrequencyTable& table) {
  json counts = json::object();
  for (const auto& [key, count] : table.counts) counts[key] = count;
  return {{"total", table.total_tokens}, {"counts", counts}};
}

ngram::FrequencyTable counts_from_json(const json& j, Stance party) {
  ngram::FrequencyTable table;
  table.party = party;
  table.total_tokens = j.at("total").get<std::int64_t>();
  for (const auto& [key, count] : j.at("counts").items()) {
    table.counts[key] = count.get<std::int64_t>();
  }
  return table;
}

}  // namespace

void save_model(std::ostream& out, const StanceClassifier& c) {
  json j;
  j["format"] = kFormatTag;
  j["version"] = kModelFormatVersion;
  j["classifier"] = std::string(classifier_name(c.config.classifier));
  j["vectorizer"] = std::string(vectorizer_name(c.config.vectorizer));
  j["ngram"] = ngram_range_name(c.config.range);
  j["cleaning"] = std::string(textprep::mode_name(c.config.cleaning));
  j["alpha"] = c.config.alpha;
  j["svm"] = {{"lambda", c.config.svm.lambda},
              {"epochs", c.config.svm.epochs},
              {"seed", c.config.svm.seed}};
  j["vocabulary"] = {{"built_from", c.features.vocab.built_from()},
                     {"terms", c.features.vocab.terms()}};
  j["idf"] = c.features.idf;
  if (const auto* nb = std::get_if<NBModel>(&c.model)) {
    j["model"] = {{"alpha", nb->alpha},
                  {"class_log_priors", nb->class_log_priors},
                  {"feature_log_likelihoods", nb->feature_log_likelihoods}};
  } else {
    const auto& svm = std::get<SVMModel>(c.model);
    j["model"] = {{"weights", svm.weights}, {"bias", svm.bias}};
  }
  j["feature_counts"] = {{"left", counts_to_json(c.left_counts)},
                         {"right", counts_to_json(c.right_counts)}};
  out << j.dump() << '\n';
}

StanceClassifier load_model(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", std::string{}) != kFormatTag) {
    throw SchemaError("not a stancecraft model file");
  }
  if (j.value("version", 0) != kModelFormatVersion) {
    throw SchemaError("unsupported model format version " +
                      j["version"].dump());
  }
  try {
    StanceClassifier c;
    const auto classifier = parse_classifier(j.at("classifier").get<std::string>());
    const auto vectorizer = parse_vectorizer(j.at("vectorizer").get<std::string>());
    const auto range = parse_ngram_range(j.at("ngram").get<std::string>());
    const auto cleaning = textprep::parse_mode(j.at("cleaning").get<std::string>());
    if (!classifier || !vectorizer || !range || !cleaning) {
      throw SchemaError("model file has an unknown configuration value");
    }
    c.config.classifier = *classifier;
    c.config.vectorizer = *vectorizer;
    c.config.range = *range;
    c.config.cleaning = *cleaning;
    c.config.alpha = j.at("alpha").get<double>();
    c.config.svm.lambda = j.at("svm").at("lambda").get<double>();
    c.config.svm.epochs = j.at("svm").at("epochs").get<std::size_t>();
    c.config.svm.seed = j.at("svm").at("seed").get<std::uint64_t>();

    c.features.vocab = Vocabulary::from_terms(
        j.at("vocabulary").at("terms").get<std::vector<std::string>>(),
        c.config.range,
        j.at("vocabulary").at("built_from").get<std::string>());
    c.features.kind = c.config.vectorizer;
    c.features.idf = j.at("idf").get<std::vector<double>>();
    const std::size_t dim = c.features.vocab.size();
    if (c.features.kind == VectorizerKind::Tfidf && c.features.idf.size() != dim) {
      throw SchemaError("idf vector length does not match the vocabulary");
    }

    const auto& m = j.at("model");
    if (c.config.classifier == ClassifierKind::NaiveBayes) {
      NBModel nb;
      nb.alpha = m.at("alpha").get<double>();
      nb.class_log_priors = m.at("class_log_priors").get<std::array<double, 2>>();
      nb.feature_log_likelihoods =
          m.at("feature_log_likelihoods").get<std::array<std::vector<double>, 2>>();
      if (nb.feature_log_likelihoods[0].size() != dim ||
          nb.feature_log_likelihoods[1].size() != dim) {
        throw SchemaError("likelihood table does not match the vocabulary");
      }
      c.model = std::move(nb);
    } else {
      SVMModel svm;
      svm.config = c.config.svm;
      svm.weights = m.at("weights").get<std::vector<double>>();
      svm.bias = m.at("bias").get<double>();
      if (svm.weights.size() != dim) {
        throw SchemaError("weight vector does not match the vocabulary");
      }
      c.model = std::move(svm);
    }
    c.left_counts = counts_from_json(j.at("feature_counts").at("left"), Stance::Left);
    c.right_counts =
        counts_from_json(j.at("feature_counts").at("right"), Stance::Right);
    return c;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model file malformed: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path,
                const StanceClassifier& classifier) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  save_model(out, classifier);
}

StanceClassifier load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return load_model(in);
}

}  // namespace stancecraft::classify
