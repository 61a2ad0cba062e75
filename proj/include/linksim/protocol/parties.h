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

#ifndef LINKSIM_PROTOCOL_PARTIES_H_
#define LINKSIM_PROTOCOL_PARTIES_H_

#include <optional>
#include <string>
#include <vector>

#include "linksim/linkage/classify.h"
#include "linksim/protocol/message.h"
#include "linksim/protocol/operations.h"

namespace linksim {

struct Outgoing {
  int step;
  PartyId receiver;
  Payload payload;
};

// A protocol participant. The engine hands a party nothing but the messages
// addressed to it; anything else it knows came in through its constructor.
class Party {
 public:
  virtual ~Party() = default;
  virtual PartyId id() const = 0;
  virtual std::vector<Outgoing> start() { return {}; }
  virtual std::vector<Outgoing> receive(const Message& message) = 0;
};

class DataOwner : public Party {
 public:
  // `enc` is required in PPRL mode and must be empty in TDL mode.
  DataOwner(PartyId self, const Database& db, ProtocolVariant variant,
            std::optional<EncodingContext> enc, PartyId lu, PartyId dm);

  PartyId id() const override { return self_; }
  std::vector<Outgoing> start() override;
  std::vector<Outgoing> receive(const Message& message) override;

 private:
  PartyId self_;
  const Database& db_;
  ProtocolVariant variant_;
  std::optional<EncodingContext> enc_;
  PartyId lu_;
  PartyId dm_;
};

class LinkageUnit : public Party {
 public:
  LinkageUnit(PartyId self, ProtocolVariant variant, LinkConfig config,
              std::string project, PartyId dm);

  PartyId id() const override { return self_; }
  std::vector<Outgoing> receive(const Message& message) override;

  const MatchSet& matches() const { return matches_; }

 private:
  PartyId self_;
  ProtocolVariant variant_;
  LinkConfig config_;
  std::string project_;
  PartyId dm_;
  // Step-1 payloads are dropped once linkage has run.
  std::optional<Payload> from_a_;
  std::optional<Payload> from_b_;
  MatchSet matches_;
};

// What the data merger holds after a run. In the no-backflow flow this
// includes the payload of every non-matched record.
struct DataMergerState {
  std::optional<PdWithMid> mid_a, mid_b;
  std::optional<PdWithId> all_a, all_b;
  std::optional<MatchIdPairs> pairs;
  std::vector<std::pair<std::string, std::vector<std::string>>> unmatched_a;
  std::vector<std::pair<std::string, std::vector<std::string>>> unmatched_b;
};

class DataMerger : public Party {
 public:
  DataMerger(PartyId self, ProtocolVariant variant, std::string project);

  PartyId id() const override { return self_; }
  std::vector<Outgoing> receive(const Message& message) override;

  const DataMergerState& state() const { return state_; }
  const std::optional<Suf>& suf() const { return suf_; }

 private:
  std::vector<Outgoing> try_merge();

  PartyId self_;
  ProtocolVariant variant_;
  std::string project_;
  DataMergerState state_;
  std::optional<Suf> suf_;
};

// Linkage unit and data merger run by one organisation (TDL only).
class MergedLinkageMerger : public Party {
 public:
  MergedLinkageMerger(ProtocolVariant variant, LinkConfig config,
                      std::string project);

  PartyId id() const override { return PartyId::kLuDm; }
  std::vector<Outgoing> receive(const Message& message) override;

  const LinkageUnit& linkage_unit() const { return lu_; }
  const DataMerger& data_merger() const { return dm_; }

 private:
  LinkageUnit lu_;
  DataMerger dm_;
};

// Step-4 receiver.
class Sink : public Party {
 public:
  PartyId id() const override { return PartyId::kOut; }
  std::vector<Outgoing> receive(const Message& message) override;
  const std::optional<Suf>& suf() const { return suf_; }

 private:
  std::optional<Suf> suf_;
};

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_PARTIES_H_
