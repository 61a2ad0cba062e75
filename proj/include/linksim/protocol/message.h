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

#ifndef LINKSIM_PROTOCOL_MESSAGE_H_
#define LINKSIM_PROTOCOL_MESSAGE_H_

#include <cstdint>
#include <string>

#include "linksim/protocol/party.h"
#include "linksim/protocol/payload.h"

namespace linksim {

struct Message {
  std::uint64_t seq = 0;
  int step = 0;
  PartyId sender = PartyId::kDoA;
  PartyId receiver = PartyId::kLu;
  Payload payload;
  std::string payload_bytes;  // canonical JSON of `payload`

  PayloadKind kind() const { return kind_of(payload); }
};

// Fills payload_bytes from payload.
Message make_message(std::uint64_t seq, int step, PartyId sender,
                     PartyId receiver, Payload payload);

// One JSON Lines record: seq, step, sender, receiver, kind, payload.
std::string to_json_line(const Message& message);
// Throws ParseError; `line` is used for error context only.
Message message_from_json_line(const std::string& text, std::size_t line = 0);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_MESSAGE_H_
