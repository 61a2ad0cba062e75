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

#include "linksim/protocol/transcript.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "linksim/encode/keyed_hash.h"
#include "linksim/errors.h"

namespace linksim {

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& m : messages) {
    out += to_json_line(m);
    out += '\n';
  }
  return out;
}

std::string Transcript::digest() const { return sha256_hex(to_jsonl()); }

std::vector<const Message*> Transcript::inbox(PartyId party) const {
  std::vector<const Message*> out;
  for (const auto& m : messages) {
    if (m.receiver == party) out.push_back(&m);
  }
  return out;
}

std::vector<const Message*> Transcript::outbox(PartyId party) const {
  std::vector<const Message*> out;
  for (const auto& m : messages) {
    if (m.sender == party) out.push_back(&m);
  }
  return out;
}

std::vector<Message> parse_jsonl(const std::string& text) {
  std::vector<Message> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    out.push_back(message_from_json_line(line, n));
  }
  return out;
}

std::vector<Message> load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_jsonl(buf.str());
}

}  // namespace linksim
