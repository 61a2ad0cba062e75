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

#ifndef LINKSIM_AUDIT_OBSERVATIONS_H_
#define LINKSIM_AUDIT_OBSERVATIONS_H_

#include <optional>
#include <vector>

#include "linksim/protocol/engine.h"
#include "linksim/protocol/transcript.h"

namespace linksim {

// Everything one party holds after a run: its local data, the messages
// addressed to it, and the messages it sent itself.
struct ObservationSet {
  PartyId party = PartyId::kDoA;
  std::optional<PartyLocal> own_data;  // data owners only
  std::vector<Message> received;
  std::vector<Message> sent;
};

// Parties that take part in a run of this shape.
std::vector<PartyId> participants(ProtocolVariant variant, bool merged_lu_dm);

// Filters the transcript by receiver (and sender, for `sent`). A party that
// does not take part in the run is a ContractError.
ObservationSet observations(const Transcript& transcript, PartyId party,
                            const RunLocals& locals);

}  // namespace linksim

#endif  // LINKSIM_AUDIT_OBSERVATIONS_H_
