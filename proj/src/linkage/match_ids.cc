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

#include "linksim/linkage/match_ids.h"

#include <fmt/format.h>

namespace linksim {

MatchId make_match_id(const std::string& project, std::size_t counter) {
  return MatchId(fmt::format("P{}-{}", project, counter));
}

MatchIdAssignment assign_match_ids(const MatchSet& matches,
                                   const std::string& project) {
  MatchIdAssignment out;
  std::size_t counter = 0;
  for (const auto& p : matches.pairs()) {
    const MatchId mid = make_match_id(project, counter++);
    out.by_left.emplace(p.left, mid);
    out.by_right.emplace(p.right, mid);
    out.pairs.emplace(mid, std::make_pair(p.left, p.right));
  }
  return out;
}

}  // namespace linksim
