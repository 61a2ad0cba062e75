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

#ifndef LINKSIM_PROTOCOL_ANONYMIZER_H_
#define LINKSIM_PROTOCOL_ANONYMIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "linksim/protocol/payload.h"

namespace linksim {

struct SdcRule {
  enum class Op { kDrop, kRound, kTopCode };
  std::string column;  // SUF header name, e.g. "A.Income"
  Op op = Op::kDrop;
  double value = 0.0;  // rounding base or top-code ceiling

  bool operator==(const SdcRule&) const = default;
};

struct SdcParams {
  std::size_t k = 1;
  std::vector<SdcRule> rules;

  bool operator==(const SdcParams&) const = default;
};

// Minimal disclosure control: drops the match id, applies the column rules
// (numeric rules leave non-numeric cells alone), then suppresses every row
// whose resulting tuple occurs fewer than k times. A rule naming an unknown
// column is a ConfigError.
Puf da_anonymize(const Suf& suf, const SdcParams& sdc);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_ANONYMIZER_H_
