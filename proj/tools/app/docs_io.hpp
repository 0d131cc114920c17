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

#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "stancecraft/textprep.hpp"

namespace stancecraft::app {

inline constexpr int kDocsSchemaVersion = 1;

// Preprocessed documents as JSONL: a header line with the cleaning mode,
// then one {"id","date","label","tokens"} object per document.
void write_docs(std::ostream& out, const std::vector<textprep::TokenizedDoc>& docs,
                textprep::Mode mode);
std::vector<textprep::TokenizedDoc> read_docs(std::istream& in);

// True when the file starts with a preprocessed-documents header.
bool is_docs_file(const std::filesystem::path& path);

}  // namespace stancecraft::app
