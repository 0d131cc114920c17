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

#include "app/manifest.hpp"

#include <fstream>
#include <iterator>

#include "json.hpp"
#include "stancecraft/error.hpp"
#include "stancecraft/strings.hpp"

namespace stancecraft::app {

FileDigest digest_file(const std::filesystem::path& path,
                       const std::string& name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  const std::string bytes{std::istreambuf_iterator<char>(in),
                          std::istreambuf_iterator<char>()};
  return {name, bytes.size(), hex64(fnv1a64(bytes))};
}

void Manifest::add_input(const std::filesystem::path& path) {
  inputs.push_back(digest_file(path, path.filename().string()));
}

void Manifest::add_output(const std::filesystem::path& dir,
                          const std::string& name) {
  outputs.push_back(digest_file(dir / name, name));
}

std::string Manifest::config_hash() const {
  std::string canonical = command;
  canonical += '\n';
  canonical += std::to_string(seed);
  for (const auto& [key, value] : config) {
    canonical += '\n';
    canonical += key;
    canonical += '=';
    canonical += value;
  }
  return hex64(fnv1a64(canonical));
}

std::string Manifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "stancecraft";
  j["version"] = STANCECRAFT_VERSION;
  j["command"] = command;
  j["seed"] = seed;
  j["config_hash"] = config_hash();
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) j["config"][key] = value;
  auto files = [](const std::vector<FileDigest>& list) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : list) {
      arr.push_back({{"name", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.fnv1a64}});
    }
    return arr;
  };
  j["inputs"] = files(inputs);
  j["outputs"] = files(outputs);
  return j.dump(2) + "\n";
}

void Manifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest " + path.string());
  out << to_json();
}

}  // namespace stancecraft::app
