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

#include "linksim/errors.h"
#include "linksim/protocol/parties.h"

namespace linksim {

LinkageUnit::LinkageUnit(PartyId self, ProtocolVariant variant,
                         LinkConfig config, std::string project, PartyId dm)
    : self_(self),
      variant_(variant),
      config_(std::move(config)),
      project_(std::move(project)),
      dm_(dm) {}

std::vector<Outgoing> LinkageUnit::receive(const Message& message) {
  if (message.kind() != PayloadKind::kIdQidList) {
    throw ContractError("linkage unit received an unexpected message");
  }
  auto& slot = message.sender == PartyId::kDoA ? from_a_ : from_b_;
  if (slot) throw ContractError("duplicate step-1 payload");
  slot = message.payload;
  if (!from_a_ || !from_b_) return {};

  matches_ = lu_link(*from_a_, *from_b_, variant_.mode, config_);
  from_a_.reset();
  from_b_.reset();

  if (variant_.flow == Flow::kSeparation) {
    auto [to_a, to_b] =
        lu_backflow(assign_match_ids(matches_, project_), variant_.flow);
    return {{2, PartyId::kDoA, std::move(to_a)},
            {2, PartyId::kDoB, std::move(to_b)}};
  }
  return {{2, dm_, lu_match_pairs(matches_)}};
}

}  // namespace linksim
