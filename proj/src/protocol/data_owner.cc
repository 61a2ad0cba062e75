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

DataOwner::DataOwner(PartyId self, const Database& db, ProtocolVariant variant,
                     std::optional<EncodingContext> enc, PartyId lu,
                     PartyId dm)
    : self_(self),
      db_(db),
      variant_(variant),
      enc_(std::move(enc)),
      lu_(lu),
      dm_(dm) {
  if (!is_data_owner(self)) throw ContractError("data owner needs a DO id");
  if ((variant.mode == Mode::kPprl) != enc_.has_value()) {
    throw ConfigError(variant.mode == Mode::kPprl
                          ? "PPRL data owner needs an encoding context"
                          : "TDL data owner must not hold an encoding key");
  }
}

std::vector<Outgoing> DataOwner::start() {
  const EncodingContext* enc = enc_ ? &*enc_ : nullptr;
  std::vector<Outgoing> out;
  out.push_back({1, lu_, do_prepare_step1(db_, variant_.mode, enc)});
  if (variant_.flow == Flow::kNoBackflow) {
    // Owners learn nothing back, so they can ship every payload row at once.
    out.push_back({3, dm_, do_send_all_pd(db_, variant_.mode, enc)});
  }
  return out;
}

std::vector<Outgoing> DataOwner::receive(const Message& message) {
  const auto* backflow = std::get_if<MatchBackflow>(&message.payload);
  if (!backflow || variant_.flow != Flow::kSeparation) {
    throw ContractError("data owner received an unexpected message");
  }
  const EncodingContext* enc = enc_ ? &*enc_ : nullptr;
  return {{3, dm_, do_attach_pd(db_, *backflow, variant_.mode, enc)}};
}

}  // namespace linksim
