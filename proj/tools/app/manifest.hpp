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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace stancecraft::app {

struct FileDigest {
  std::string name;
  std::uint64_t bytes = 0;
  std::string fnv1a64;
};

FileDigest digest_file(const std::filesystem::path& path,
                       const std::string& name);

// Run record written next to every command's outputs. It holds no
// timestamps and no absolute output paths, so identical reruns produce
// byte-identical manifests.
struct Manifest {
  std::string command;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;

  void add_input(const std::filesystem::path& path);
  // Digests `dir / name` and records it under `name`.
  void add_output(const std::filesystem::path& dir, const std::string& name);

  std::string config_hash() const;
  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace stancecraft::app
