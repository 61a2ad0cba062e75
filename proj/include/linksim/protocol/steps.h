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

#ifndef LINKSIM_PROTOCOL_STEPS_H_
#define LINKSIM_PROTOCOL_STEPS_H_

#include <optional>
#include <string>
#include <vector>

#include "linksim/protocol/message.h"

namespace linksim {

struct LegalStep {
  int step;
  PartyId sender;
  PartyId receiver;
  PayloadKind kind;
};

// Every message a run of `variant` sends, in scheduling order. With
// `merged_lu_dm` the linkage unit and data merger share the id kLuDm.
//
//   sep: 1 DO_A->LU, DO_B->LU   2 LU->DO_A, LU->DO_B
//        3 DO_A->DM, DO_B->DM   4 DM->OUT
//   nbf: 1 DO_A->LU, DO_B->LU   2 LU->DM
//        3 DO_A->DM, DO_B->DM   4 DM->OUT
std::vector<LegalStep> legal_steps(ProtocolVariant variant, bool merged_lu_dm);

// nullopt when legal, otherwise why not. Besides the step table this checks
// the mode: TDL never carries filters, PPRL step 1 never carries plain QIDs.
std::optional<std::string> check_message(ProtocolVariant variant,
                                         bool merged_lu_dm,
                                         const Message& message);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_STEPS_H_
