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

#ifndef LINKSIM_LINKAGE_CLASSIFY_H_
#define LINKSIM_LINKAGE_CLASSIFY_H_

#include <string>
#include <vector>

#include "linksim/linkage/similarity.h"

namespace linksim {

// Left and right are record ids in TDL mode and encoded ids in PPRL mode;
// linkage does not care which.
struct ScoredPair {
  std::string left;
  std::string right;
  SimilarityScore score;

  bool operator==(const ScoredPair&) const = default;
};

// One-to-one set of accepted pairs, kept sorted by (left, right).
class MatchSet {
 public:
  MatchSet() = default;
  // ContractError if an id repeats on either side.
  explicit MatchSet(std::vector<ScoredPair> pairs);

  const std::vector<ScoredPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<ScoredPair> pairs_;
};

// Greedy one-to-one: walk candidates by descending score, ties broken by
// (left, right), and keep a pair when its score reaches the threshold and
// neither side is taken yet.
MatchSet classify(std::vector<ScoredPair> candidates, double threshold);

}  // namespace linksim

#endif  // LINKSIM_LINKAGE_CLASSIFY_H_
