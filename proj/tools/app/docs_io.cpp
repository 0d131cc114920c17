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

#include "app/docs_io.hpp"

#include <fstream>
#include <string>

#include "json.hpp"
#include "stancecraft/error.hpp"

namespace stancecraft::app {

void write_docs(std::ostream& out,
                const std::vector<textprep::TokenizedDoc>& docs,
                textprep::Mode mode) {
  nlohmann::ordered_json header;
  header["kind"] = "docs";
  header["schema"] = kDocsSchemaVersion;
  header["mode"] = std::string(textprep::mode_name(mode));
  header["records"] = docs.size();
  out << header.dump() << '\n';
  for (const auto& d : docs) {
    nlohmann::ordered_json obj;
    obj["id"] = d.source_id;
    obj["date"] = format_iso8601(d.timestamp);
    obj["label"] = corpus::stance_value(d.label);
    obj["tokens"] = d.tokens;
    out << obj.dump() << '\n';
  }
}

std::vector<textprep::TokenizedDoc> read_docs(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("documents file is empty");
  const auto header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() ||
      header.value("kind", "") != "docs") {
    throw SchemaError("documents file lacks a docs header");
  }
  if (header.value("schema", 0) != kDocsSchemaVersion) {
    throw SchemaError("unsupported documents schema");
  }
  const auto expected = header.value("records", std::size_t{0});
  std::vector<textprep::TokenizedDoc> docs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw SchemaError("malformed document at line " + std::to_string(line_no));
    }
    textprep::TokenizedDoc d;
    try {
      d.source_id = obj.at("id").get<std::string>();
      const auto ts = parse_iso8601(obj.at("date").get<std::string>());
      if (!ts) throw SchemaError("bad date");
      d.timestamp = *ts;
      d.label = corpus::stance_from_value(obj.at("label").get<int>());
      d.tokens = obj.at("tokens").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw SchemaError("malformed document at line " + std::to_string(line_no));
    } catch (const Error&) {
      throw SchemaError("malformed document at line " + std::to_string(line_no));
    }
    docs.push_back(std::move(d));
  }
  if (docs.size() != expected) {
    throw SchemaError("documents file truncated: expected " +
                      std::to_string(expected) + " records, found " +
                      std::to_string(docs.size()));
  }
  return docs;
}

bool is_docs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return false;
  const auto header = nlohmann::json::parse(line, nullptr, false);
  return header.is_object() && header.value("kind", "") == "docs";
}

}  // namespace stancecraft::app
