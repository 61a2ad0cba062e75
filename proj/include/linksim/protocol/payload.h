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

#ifndef LINKSIM_PROTOCOL_PAYLOAD_H_
#define LINKSIM_PROTOCOL_PAYLOAD_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "linksim/encode/bloom_filter.h"
#include "linksim/protocol/party.h"

namespace linksim {

enum class PayloadKind {
  kIdQidList,
  kMatchBackflow,
  kPdWithMid,
  kPdWithId,
  kMatchIdPairs,
  kSufFile,
  kPufFile
};

std::string_view to_string(PayloadKind kind);
PayloadKind parse_payload_kind(std::string_view text);

// Step 1, TDL: (id, qid) per record.
struct PlainQidList {
  std::vector<std::string> qid_names;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  bool operator==(const PlainQidList&) const = default;
};

// Step 1, PPRL: (eid, eqid) per record.
struct EncodedQidList {
  std::string params_fingerprint;
  std::vector<std::pair<std::string, BloomFilter>> entries;
  bool operator==(const EncodedQidList&) const = default;
};

// Step 2, separation principle: (id or eid, match id) for matched records.
struct MatchBackflow {
  std::vector<std::pair<std::string, std::string>> entries;
  bool operator==(const MatchBackflow&) const = default;
};

// Payload rows keyed by match id (separation principle) or by record id
// (no backflow).
struct PdWithMid {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  bool operator==(const PdWithMid&) const = default;
};

struct PdWithId {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  bool operator==(const PdWithId&) const = default;
};

// Step 2, no backflow: the matched identifier pairs M^id.
struct MatchIdPairs {
  std::vector<std::pair<std::string, std::string>> entries;
  bool operator==(const MatchIdPairs&) const = default;
};

struct SufRow {
  std::string match_id;
  std::vector<std::string> pd_left;
  std::vector<std::string> pd_right;
  bool operator==(const SufRow&) const = default;
};

// Scientific use file: payload of matched pairs only. No record ids, no QIDs.
struct Suf {
  std::vector<std::string> left_columns;
  std::vector<std::string> right_columns;
  std::vector<SufRow> rows;

  // "MatchId", "A.<col>"..., "B.<col>"...
  std::vector<std::string> header() const;
  bool operator==(const Suf&) const = default;
};

// Public use file: anonymised SUF rows without a match id column.
struct Puf {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const Puf&) const = default;
};

struct SufFile {
  Suf suf;
  bool operator==(const SufFile&) const = default;
};

struct PufFile {
  Puf puf;
  bool operator==(const PufFile&) const = default;
};

using Payload = std::variant<PlainQidList, EncodedQidList, MatchBackflow,
                             PdWithMid, PdWithId, MatchIdPairs, SufFile,
                             PufFile>;

PayloadKind kind_of(const Payload& payload);
std::size_t entry_count(const Payload& payload);

// Canonical JSON. Filters and digests travel as hex strings; key order is
// fixed so equal payloads serialize to equal bytes.
nlohmann::ordered_json payload_to_json(const Payload& payload);
Payload payload_from_json(PayloadKind kind, const nlohmann::ordered_json& j);

void write_suf_csv(const Suf& suf, std::ostream& out);
void write_puf_csv(const Puf& puf, std::ostream& out);
Suf read_suf_csv(std::istream& in);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_PAYLOAD_H_
