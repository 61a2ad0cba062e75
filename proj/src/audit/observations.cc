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

#include "linksim/audit/observations.h"

#include <algorithm>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

std::vector<PartyId> participants(ProtocolVariant, bool merged_lu_dm) {
  if (merged_lu_dm) {
    return {PartyId::kDoA, PartyId::kDoB, PartyId::kLuDm, PartyId::kOut};
  }
  return {PartyId::kDoA, PartyId::kDoB, PartyId::kLu, PartyId::kDm,
          PartyId::kOut};
}

ObservationSet observations(const Transcript& transcript, PartyId party,
                            const RunLocals& locals) {
  const auto who = participants(transcript.variant, transcript.merged_lu_dm);
  if (std::find(who.begin(), who.end(), party) == who.end()) {
    throw ContractError(fmt::format("party {} does not take part in this run",
                                    to_string(party)));
  }
  ObservationSet obs;
  obs.party = party;
  if (const PartyLocal* own = locals.owner(party)) obs.own_data = *own;
  for (const Message* m : transcript.inbox(party)) obs.received.push_back(*m);
  for (const Message* m : transcript.outbox(party)) obs.sent.push_back(*m);
  return obs;
}

}  // namespace linksim
