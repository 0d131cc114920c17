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

#include <stdexcept>
#include <string>

namespace stancecraft {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration or arguments: empty term lists, invalid split
// fractions, missing resource files. The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data violates a corpus invariant (duplicate ids, mixed parties).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A persisted file has the wrong schema version or is truncated.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Precondition failures on numeric operations (empty documents, unseen
// conditioning token, dimension mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace stancecraft
