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

#include "linksim/protocol/steps.h"

#include <fmt/format.h>

namespace linksim {

std::vector<LegalStep> legal_steps(ProtocolVariant variant, bool merged_lu_dm) {
  const PartyId lu = merged_lu_dm ? PartyId::kLuDm : PartyId::kLu;
  const PartyId dm = merged_lu_dm ? PartyId::kLuDm : PartyId::kDm;
  std::vector<LegalStep> steps = {
      {1, PartyId::kDoA, lu, PayloadKind::kIdQidList},
      {1, PartyId::kDoB, lu, PayloadKind::kIdQidList},
  };
  if (variant.flow == Flow::kSeparation) {
    steps.push_back({2, lu, PartyId::kDoA, PayloadKind::kMatchBackflow});
    steps.push_back({2, lu, PartyId::kDoB, PayloadKind::kMatchBackflow});
    steps.push_back({3, PartyId::kDoA, dm, PayloadKind::kPdWithMid});
    steps.push_back({3, PartyId::kDoB, dm, PayloadKind::kPdWithMid});
  } else {
    steps.push_back({2, lu, dm, PayloadKind::kMatchIdPairs});
    steps.push_back({3, PartyId::kDoA, dm, PayloadKind::kPdWithId});
    steps.push_back({3, PartyId::kDoB, dm, PayloadKind::kPdWithId});
  }
  steps.push_back({4, dm, PartyId::kOut, PayloadKind::kSufFile});
  return steps;
}

std::optional<std::string> check_message(ProtocolVariant variant,
                                         bool merged_lu_dm,
                                         const Message& message) {
  bool listed = false;
  for (const auto& s : legal_steps(variant, merged_lu_dm)) {
    if (s.step == message.step && s.sender == message.sender &&
        s.receiver == message.receiver && s.kind == message.kind()) {
      listed = true;
      break;
    }
  }
  if (!listed) {
    return fmt::format("step {} {}->{} {} is not in the {} step table",
                       message.step, to_string(message.sender),
                       to_string(message.receiver), to_string(message.kind()),
                       to_string(variant));
  }
  const bool plain = std::holds_alternative<PlainQidList>(message.payload);
  const bool encoded = std::holds_alternative<EncodedQidList>(message.payload);
  if (variant.mode == Mode::kTdl && encoded) {
    return "TDL message carries Bloom filters";
  }
  if (variant.mode == Mode::kPprl && plain) {
    return "PPRL message carries plain QID values";
  }
  return std::nullopt;
}

}  // namespace linksim
