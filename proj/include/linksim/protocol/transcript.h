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

#ifndef LINKSIM_PROTOCOL_TRANSCRIPT_H_
#define LINKSIM_PROTOCOL_TRANSCRIPT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "linksim/protocol/message.h"

namespace linksim {

// Every message of one run in delivery order. The variant and config
// fingerprint are run metadata; the JSON Lines form holds messages only.
struct Transcript {
  ProtocolVariant variant;
  bool merged_lu_dm = false;
  std::string config_fingerprint;
  std::vector<Message> messages;

  std::string to_jsonl() const;
  // SHA-256 of to_jsonl().
  std::string digest() const;

  // Messages whose receiver is `party`, in order.
  std::vector<const Message*> inbox(PartyId party) const;
  std::vector<const Message*> outbox(PartyId party) const;
};

// Messages only; the caller supplies variant and fingerprint.
std::vector<Message> parse_jsonl(const std::string& text);
std::vector<Message> load_jsonl(const std::filesystem::path& path);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_TRANSCRIPT_H_
