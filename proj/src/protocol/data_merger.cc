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

#include <set>

#include "linksim/errors.h"
#include "linksim/protocol/parties.h"

namespace linksim {

DataMerger::DataMerger(PartyId self, ProtocolVariant variant,
                       std::string project)
    : self_(self), variant_(variant), project_(std::move(project)) {}

std::vector<Outgoing> DataMerger::receive(const Message& message) {
  const bool from_a = message.sender == PartyId::kDoA;
  if (const auto* p = std::get_if<PdWithMid>(&message.payload)) {
    (from_a ? state_.mid_a : state_.mid_b) = *p;
  } else if (const auto* p = std::get_if<PdWithId>(&message.payload)) {
    (from_a ? state_.all_a : state_.all_b) = *p;
  } else if (const auto* p = std::get_if<MatchIdPairs>(&message.payload)) {
    state_.pairs = *p;
  } else {
    throw ContractError("data merger received an unexpected message");
  }
  return try_merge();
}

std::vector<Outgoing> DataMerger::try_merge() {
  if (suf_) return {};
  if (variant_.flow == Flow::kSeparation) {
    if (!state_.mid_a || !state_.mid_b) return {};
    suf_ = dm_merge_sep(*state_.mid_a, *state_.mid_b);
  } else {
    if (!state_.pairs || !state_.all_a || !state_.all_b) return {};
    suf_ = dm_merge_nbf(*state_.pairs, *state_.all_a, *state_.all_b, project_);
    std::set<std::string> left, right;
    for (const auto& [l, r] : state_.pairs->entries) {
      left.insert(l);
      right.insert(r);
    }
    for (const auto& e : state_.all_a->entries) {
      if (!left.count(e.first)) state_.unmatched_a.push_back(e);
    }
    for (const auto& e : state_.all_b->entries) {
      if (!right.count(e.first)) state_.unmatched_b.push_back(e);
    }
  }
  return {{4, PartyId::kOut, SufFile{*suf_}}};
}

MergedLinkageMerger::MergedLinkageMerger(ProtocolVariant variant,
                                         LinkConfig config, std::string project)
    : lu_(PartyId::kLuDm, variant, std::move(config), project, PartyId::kLuDm),
      dm_(PartyId::kLuDm, variant, project) {
  if (variant.mode == Mode::kPprl) {
    throw ConfigError("linkage unit and data merger cannot merge under PPRL");
  }
}

std::vector<Outgoing> MergedLinkageMerger::receive(const Message& message) {
  if (message.kind() == PayloadKind::kIdQidList) return lu_.receive(message);
  return dm_.receive(message);
}

std::vector<Outgoing> Sink::receive(const Message& message) {
  const auto* f = std::get_if<SufFile>(&message.payload);
  if (!f) throw ContractError("sink received an unexpected message");
  suf_ = f->suf;
  return {};
}

}  // namespace linksim
