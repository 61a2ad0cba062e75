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

#ifndef LINKSIM_LINKAGE_BLOCKING_H_
#define LINKSIM_LINKAGE_BLOCKING_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linksim/encode/bloom_filter.h"

namespace linksim {

struct BlockingStrategy {
  enum class Kind { kNone, kFirstCharOfAttr, kFilterPrefix };
  Kind kind = Kind::kNone;
  // Attribute index for kFirstCharOfAttr, prefix length in bits for
  // kFilterPrefix.
  std::size_t param = 0;

  bool operator==(const BlockingStrategy&) const = default;
};

// "none", "first-char:<attr>", "filter-prefix:<bits>".
BlockingStrategy parse_blocking(std::string_view text);
std::string to_string(const BlockingStrategy& strategy);

// Plain-text key. kFilterPrefix is a ContractError here.
std::string block_key(const std::vector<std::string>& qid,
                      const BlockingStrategy& strategy);
// Encoded key. kFirstCharOfAttr is a ContractError here: the linkage unit
// has no plain text in PPRL mode.
std::string block_key(const BloomFilter& filter,
                      const BlockingStrategy& strategy);

// Index pairs (i, j) whose keys agree, ordered by i then j.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<std::string>& left_keys,
    const std::vector<std::string>& right_keys);

}  // namespace linksim

#endif  // LINKSIM_LINKAGE_BLOCKING_H_
