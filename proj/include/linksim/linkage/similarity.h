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

#ifndef LINKSIM_LINKAGE_SIMILARITY_H_
#define LINKSIM_LINKAGE_SIMILARITY_H_

#include <compare>
#include <string>
#include <vector>

#include "linksim/encode/bloom_filter.h"
#include "linksim/model/schema.h"

namespace linksim {

// Similarity in [0, 1]. Construction outside that range is a ContractError.
class SimilarityScore {
 public:
  explicit SimilarityScore(double value);
  double value() const { return value_; }
  auto operator<=>(const SimilarityScore&) const = default;

 private:
  double value_;
};

// 2|A ∩ B| / (|A| + |B|) over gram multisets; 0 when both are empty.
double multiset_dice(std::vector<std::string> a, std::vector<std::string> b);

// Weighted per-attribute Dice on unpadded lowercase bigrams.
//   empty vs non-empty  -> 0
//   empty vs empty      -> attribute skipped, its weight redistributed
//   too short for grams -> exact string equality
// ContractError when the lists do not both match the schema's QID arity.
SimilarityScore plain_similarity(const std::vector<std::string>& qid_a,
                                 const std::vector<std::string>& qid_b,
                                 const Schema& schema);

// Dice on set bits. Two all-zero filters score 0.
SimilarityScore bloom_dice(const BloomFilter& a, const BloomFilter& b);

}  // namespace linksim

#endif  // LINKSIM_LINKAGE_SIMILARITY_H_
