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

#include "linksim/audit/group_disclosure.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

std::vector<Fact> group_disclosure(const ObservationSet& dm,
                                   ProtocolVariant variant,
                                   const RunLocals& locals,
                                   const std::string& category_attr,
                                   double flag_threshold) {
  if (variant.flow != Flow::kNoBackflow) {
    throw ContractError(
        "group disclosure needs the payload of non-matched records, which "
        "the data merger only receives under the no-backflow flow");
  }
  if (!acts_as_data_merger(dm.party)) {
    throw ContractError(fmt::format("{} is not a data merger",
                                    to_string(dm.party)));
  }
  if (!(flag_threshold >= 0.0)) {
    throw ContractError("flag threshold must be non-negative");
  }

  const Message* pairs_msg = nullptr;
  for (const auto& m : dm.received) {
    if (m.kind() == PayloadKind::kMatchIdPairs) pairs_msg = &m;
  }
  if (!pairs_msg) throw ContractError("data merger holds no match pairs");
  const auto& pairs = std::get<MatchIdPairs>(pairs_msg->payload).entries;

  std::vector<Fact> out;
  bool attr_seen = false;
  for (PartyId owner : {PartyId::kDoA, PartyId::kDoB}) {
    const Message* pd_msg = nullptr;
    for (const auto& m : dm.received) {
      if (m.sender == owner && m.kind() == PayloadKind::kPdWithId) pd_msg = &m;
    }
    if (!pd_msg) continue;
    const auto& pd = std::get<PdWithId>(pd_msg->payload);
    auto col = std::find(pd.columns.begin(), pd.columns.end(), category_attr);
    if (col == pd.columns.end()) continue;
    attr_seen = true;
    const auto idx = static_cast<std::size_t>(col - pd.columns.begin());

    std::set<std::string> matched;
    for (const auto& [l, r] : pairs) {
      matched.insert(owner == PartyId::kDoA ? l : r);
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    std::size_t total_matched = 0;
    for (const auto& [id, values] : pd.entries) {
      auto& c = counts[values.at(idx)];
      ++c.second;
      if (matched.count(id)) {
        ++c.first;
        ++total_matched;
      }
    }
    if (pd.entries.empty()) continue;
    const double overall =
        static_cast<double>(total_matched) / static_cast<double>(pd.entries.size());
    for (const auto& [category, c] : counts) {
      const double rate =
          static_cast<double>(c.first) / static_cast<double>(c.second);
      // Small tolerance so a delta equal to the threshold in exact arithmetic is not
      // lost to rounding.
      if (std::fabs(rate - overall) + 1e-12 < flag_threshold) continue;
      Fact f;
      f.kind = FactKind::kGroupDisclosure;
      if (const PartyLocal* l = locals.owner(owner)) {
        f.db = l->db_label;
        f.context = l->context_label;
      }
      f.category = fmt::format("{}={}", category_attr, category);
      f.rate = rate;
      f.overall_rate = overall;
      f.basis = {pd_msg->seq, pairs_msg->seq};
      std::sort(f.basis.begin(), f.basis.end());
      out.push_back(std::move(f));
    }
  }
  if (!attr_seen) {
    throw ContractError(fmt::format(
        "attribute \"{}\" is not in any payload the data merger received",
        category_attr));
  }
  return out;
}

}  // namespace linksim
