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

#ifndef LINKSIM_PROTOCOL_ENGINE_H_
#define LINKSIM_PROTOCOL_ENGINE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linksim/protocol/anonymizer.h"
#include "linksim/protocol/parties.h"
#include "linksim/protocol/transcript.h"

namespace linksim {

// Single-threaded deterministic scheduler. Pending messages are delivered
// in (step, sender rank, emission order); each gets the next sequence
// number when delivered. A message outside the variant's step table is a
// ContractError and never reaches the transcript.
class Engine {
 public:
  Engine(ProtocolVariant variant, bool merged_lu_dm);

  void add(Party& party);
  Transcript run(std::string config_fingerprint);

 private:
  ProtocolVariant variant_;
  bool merged_;
  std::map<PartyId, Party*> parties_;
};

struct RunParams {
  double threshold = 0.8;
  BlockingStrategy blocking;
  std::string project = "demo";
  // Both required for PPRL, both forbidden for TDL.
  std::optional<EncodingParams> encoding;
  std::optional<SecretKey> key;
  bool merge_lu_dm = false;
  SdcParams sdc;
  std::string context_a;
  std::string context_b;
};

// What a party holds outside the transcript. For the owners that is their
// own identifiers (and, in PPRL, the encodings of them they can compute).
struct PartyLocal {
  PartyId party = PartyId::kDoA;
  std::string db_label;
  std::string context_label;
  std::vector<std::string> record_ids;
  std::vector<std::string> encoded_ids;  // PPRL only, same order
  std::vector<std::string> pd_columns;

  bool operator==(const PartyLocal&) const = default;
};

struct RunLocals {
  ProtocolVariant variant;
  bool merged_lu_dm = false;
  std::string config_fingerprint;
  std::string transcript_digest;
  std::vector<PartyLocal> owners;

  const PartyLocal* owner(PartyId party) const;
  bool operator==(const RunLocals&) const = default;
};

nlohmann::ordered_json locals_to_json(const RunLocals& locals);
RunLocals locals_from_json(const nlohmann::ordered_json& j);

struct RunResult {
  Transcript transcript;
  Suf suf;
  Puf puf;
  MatchSet lu_matches;
  DataMergerState dm_state;
  RunLocals locals;
};

// SHA-256 over the variant, every run parameter except key bytes, and the
// content of both databases.
std::string config_fingerprint(ProtocolVariant variant, const Database& db_a,
                               const Database& db_b, const RunParams& params);

// Runs one protocol end to end: owners, linkage unit, data merger, sink,
// then the anonymiser on the sink's SUF. Configuration problems raise
// ConfigError before any message is sent.
RunResult run_protocol(ProtocolVariant variant, const Database& db_a,
                       const Database& db_b, const RunParams& params);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_ENGINE_H_
