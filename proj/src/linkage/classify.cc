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

#include "linksim/linkage/classify.h"

#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

MatchSet::MatchSet(std::vector<ScoredPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), [](const auto& x, const auto& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  std::set<std::string> left, right;
  for (const auto& p : pairs_) {
    if (!left.insert(p.left).second || !right.insert(p.right).second) {
      throw ContractError(fmt::format(
          "match set is not one-to-one at ({}, {})", p.left, p.right));
    }
  }
}

MatchSet classify(std::vector<ScoredPair> candidates, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ContractError("classification threshold must lie in [0, 1]");
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& x, const auto& y) {
              if (x.score != y.score) return x.score > y.score;
              return std::tie(x.left, x.right) < std::tie(y.left, y.right);
            });
  std::set<std::string> taken_left, taken_right;
  std::vector<ScoredPair> accepted;
  for (auto& c : candidates) {
    if (c.score.value() < threshold) break;
    if (taken_left.count(c.left) || taken_right.count(c.right)) continue;
    taken_left.insert(c.left);
    taken_right.insert(c.right);
    accepted.push_back(std::move(c));
  }
  return MatchSet(std::move(accepted));
}

}  // namespace linksim
