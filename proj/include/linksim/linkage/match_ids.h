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

#ifndef LINKSIM_LINKAGE_MATCH_IDS_H_
#define LINKSIM_LINKAGE_MATCH_IDS_H_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "linksim/linkage/classify.h"

namespace linksim {

class MatchId {
 public:
  explicit MatchId(std::string value) : value_(std::move(value)) {}
  const std::string& value() const { return value_; }
  auto operator<=>(const MatchId&) const = default;

 private:
  std::string value_;
};

// "P<project>-<counter>".
MatchId make_match_id(const std::string& project, std::size_t counter);

struct MatchIdAssignment {
  std::map<std::string, MatchId> by_left;
  std::map<std::string, MatchId> by_right;
  std::map<MatchId, std::pair<std::string, std::string>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Counter follows the (left, right) order of the match set.
MatchIdAssignment assign_match_ids(const MatchSet& matches,
                                   const std::string& project);

}  // namespace linksim

#endif  // LINKSIM_LINKAGE_MATCH_IDS_H_
