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

#include "linksim/protocol/message.h"

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

using nlohmann::ordered_json;

Message make_message(std::uint64_t seq, int step, PartyId sender,
                     PartyId receiver, Payload payload) {
  Message m{seq, step, sender, receiver, std::move(payload), {}};
  m.payload_bytes = payload_to_json(m.payload).dump();
  return m;
}

std::string to_json_line(const Message& message) {
  // Spliced by hand so the payload bytes appear exactly as canonicalized.
  ordered_json head;
  head["seq"] = message.seq;
  head["step"] = message.step;
  head["sender"] = to_string(message.sender);
  head["receiver"] = to_string(message.receiver);
  head["kind"] = to_string(message.kind());
  std::string line = head.dump();
  line.pop_back();  // '}'
  line += ",\"payload\":";
  line += message.payload_bytes;
  line += '}';
  return line;
}

Message message_from_json_line(const std::string& text, std::size_t line) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("transcript: {}", e.what()), line);
  }
  try {
    const auto kind = parse_payload_kind(j.at("kind").get<std::string>());
    Message m = make_message(
        j.at("seq").get<std::uint64_t>(), j.at("step").get<int>(),
        parse_party(j.at("sender").get<std::string>()),
        parse_party(j.at("receiver").get<std::string>()),
        payload_from_json(kind, j.at("payload")));
    if (m.payload_bytes != j.at("payload").dump()) {
      throw ParseError("payload is not in canonical form", line);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("transcript: {}", e.what()), line);
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), line);
  }
}

}  // namespace linksim
