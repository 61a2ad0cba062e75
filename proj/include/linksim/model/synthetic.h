// Copyright 2026 The linksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINKSIM_MODEL_SYNTHETIC_H_
#define LINKSIM_MODEL_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linksim/model/record.h"

namespace linksim {

struct CorpusParams {
  std::size_t n_a = 100;
  std::size_t n_b = 100;
  double overlap = 0.5;    // fraction of min(n_a, n_b) present in both
  double typo_rate = 0.0;  // per-character edit probability on B copies
  std::uint64_t seed = 0;
};

struct Corpus {
  Database a;
  Database b;
  GroundTruth truth;
};

// Occupations used for the categorical payload column.
const std::vector<std::string>& synthetic_occupations();

// Deterministic in `params`. QID tuples are distinct across entities, ids
// are "A-000000"/"B-000000", payload values are drawn independently per
// database. Throws ContractError when overlap or typo_rate is outside
// [0, 1].
Corpus gen_synthetic_corpus(const CorpusParams& params);

// One per-character corruption pass (substitute, insert, delete, transpose).
// Letters stay letters and digits stay digits.
std::string corrupt(const std::string& value, double rate,
                    std::mt19937_64& rng);

}  // namespace linksim

#endif  // LINKSIM_MODEL_SYNTHETIC_H_
