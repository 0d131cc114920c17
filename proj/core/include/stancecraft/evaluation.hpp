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

#include <array>
#include <cstddef>
#include <vector>

#include "stancecraft/corpus_store.hpp"

namespace stancecraft::classify {

using corpus::Stance;

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::size_t support = 0;
};

struct EvalReport {
  double accuracy = 0.0;
  // Indexed by class slot: 0 = left (+1), 1 = right (-1).
  std::array<ClassMetrics, 2> per_class{};
  // confusion[gold slot][predicted slot]
  std::array<std::array<std::size_t, 2>, 2> confusion{};

  const ClassMetrics& metrics(Stance s) const;
  std::size_t total() const;
};

// 2PR / (P + R), or 0 when P + R == 0.
double f_measure(double precision, double recall);

// Throws DomainError on length mismatch or empty input.
EvalReport evaluate(const std::vector<Stance>& predictions,
                    const std::vector<Stance>& gold);

}  // namespace stancecraft::classify
