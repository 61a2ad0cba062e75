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

#include "linksim/protocol/engine.h"

#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

#include "linksim/encode/keyed_hash.h"
#include "linksim/errors.h"
#include "linksim/model/database_io.h"
#include "linksim/protocol/steps.h"

namespace linksim {

using nlohmann::ordered_json;

Engine::Engine(ProtocolVariant variant, bool merged_lu_dm)
    : variant_(variant), merged_(merged_lu_dm) {}

void Engine::add(Party& party) {
  if (!parties_.emplace(party.id(), &party).second) {
    throw ContractError(
        fmt::format("party {} registered twice", to_string(party.id())));
  }
}

Transcript Engine::run(std::string config_fingerprint) {
  struct Pending {
    int step;
    int rank;
    std::uint64_t order;
    PartyId sender;
    Outgoing out;
  };
  auto later = [](const Pending& x, const Pending& y) {
    return std::tie(x.step, x.rank, x.order) > std::tie(y.step, y.rank, y.order);
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(
      later);
  std::uint64_t emitted = 0;
  auto enqueue = [&](PartyId sender, std::vector<Outgoing> outs) {
    for (auto& o : outs) {
      queue.push({o.step, party_rank(sender), emitted++, sender, std::move(o)});
    }
  };

  for (auto& [id, party] : parties_) enqueue(id, party->start());

  Transcript t{variant_, merged_, std::move(config_fingerprint), {}};
  while (!queue.empty()) {
    Pending p = queue.top();
    queue.pop();
    Message m = make_message(t.messages.size() + 1, p.out.step, p.sender,
                             p.out.receiver, std::move(p.out.payload));
    if (auto why = check_message(variant_, merged_, m)) {
      throw ContractError(*why);
    }
    auto it = parties_.find(m.receiver);
    if (it == parties_.end()) {
      throw ContractError(
          fmt::format("no party {} in this run", to_string(m.receiver)));
    }
    t.messages.push_back(std::move(m));
    enqueue(it->first, it->second->receive(t.messages.back()));
  }
  return t;
}

const PartyLocal* RunLocals::owner(PartyId party) const {
  for (const auto& o : owners) {
    if (o.party == party) return &o;
  }
  return nullptr;
}

ordered_json locals_to_json(const RunLocals& locals) {
  ordered_json j;
  j["variant"] = to_string(locals.variant);
  j["merged_lu_dm"] = locals.merged_lu_dm;
  j["config_fingerprint"] = locals.config_fingerprint;
  j["transcript_digest"] = locals.transcript_digest;
  ordered_json owners = ordered_json::array();
  for (const auto& o : locals.owners) {
    ordered_json e;
    e["party"] = to_string(o.party);
    e["db_label"] = o.db_label;
    e["context_label"] = o.context_label;
    e["record_ids"] = o.record_ids;
    e["encoded_ids"] = o.encoded_ids;
    e["pd_columns"] = o.pd_columns;
    owners.push_back(std::move(e));
  }
  j["owners"] = std::move(owners);
  return j;
}

RunLocals locals_from_json(const ordered_json& j) {
  try {
    RunLocals l;
    l.variant = parse_variant(j.at("variant").get<std::string>());
    l.merged_lu_dm = j.at("merged_lu_dm").get<bool>();
    l.config_fingerprint = j.at("config_fingerprint").get<std::string>();
    l.transcript_digest = j.at("transcript_digest").get<std::string>();
    for (const auto& e : j.at("owners")) {
      PartyLocal o;
      o.party = parse_party(e.at("party").get<std::string>());
      o.db_label = e.at("db_label").get<std::string>();
      o.context_label = e.at("context_label").get<std::string>();
      o.record_ids = e.at("record_ids").get<std::vector<std::string>>();
      o.encoded_ids = e.at("encoded_ids").get<std::vector<std::string>>();
      o.pd_columns = e.at("pd_columns").get<std::vector<std::string>>();
      l.owners.push_back(std::move(o));
    }
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("run locals: {}", e.what()));
  }
}

std::string config_fingerprint(ProtocolVariant variant, const Database& db_a,
                               const Database& db_b, const RunParams& params) {
  ordered_json j;
  j["variant"] = to_string(variant);
  j["threshold"] = params.threshold;
  j["blocking"] = to_string(params.blocking);
  j["project"] = params.project;
  if (params.encoding) {
    j["encoding"] = {{"l", params.encoding->length},
                     {"k", params.encoding->num_hashes},
                     {"q", params.encoding->q},
                     {"pad", params.encoding->pad}};
  }
  // Keyed tag only: distinguishes keys without revealing them.
  if (params.key && params.encoding) {
    j["key_tag"] = params_fingerprint(*params.encoding, *params.key);
  }
  j["merge_lu_dm"] = params.merge_lu_dm;
  ordered_json sdc;
  sdc["k"] = params.sdc.k;
  for (const auto& r : params.sdc.rules) {
    sdc["rules"].push_back(
        {r.column, static_cast<int>(r.op), r.value});
  }
  j["sdc"] = sdc;
  j["context"] = {params.context_a, params.context_b};
  for (const Database* db : {&db_a, &db_b}) {
    std::ostringstream csv;
    write_database(*db, csv);
    j["databases"].push_back({{"name", db->name()},
                              {"sha256", sha256_hex(csv.str())}});
  }
  return sha256_hex(j.dump());
}

namespace {

void validate(ProtocolVariant variant, const Database& db_a,
              const Database& db_b, const RunParams& params) {
  if (!(params.threshold >= 0.0 && params.threshold <= 1.0)) {
    throw ConfigError("threshold must lie in [0, 1]");
  }
  if (params.project.empty()) throw ConfigError("project label is empty");
  if (db_a.schema().qid_attrs() != db_b.schema().qid_attrs()) {
    throw ConfigError("the two databases disagree on their QID layout");
  }
  if (variant.mode == Mode::kPprl) {
    if (!params.encoding || !params.key) {
      throw ConfigError("PPRL needs encoding parameters and a secret key");
    }
    try {
      params.encoding->validate();
    } catch (const ContractError& e) {
      throw ConfigError(e.what());
    }
    if (params.merge_lu_dm) {
      throw ConfigError(
          "linkage unit and data merger cannot be merged in PPRL protocols");
    }
    if (params.blocking.kind == BlockingStrategy::Kind::kFirstCharOfAttr) {
      throw ConfigError("first-char blocking needs plain-text QIDs");
    }
  } else {
    if (params.key) throw ConfigError("TDL runs must not be given a secret key");
    if (params.blocking.kind == BlockingStrategy::Kind::kFilterPrefix) {
      throw ConfigError("filter-prefix blocking needs PPRL encodings");
    }
    if (params.blocking.kind == BlockingStrategy::Kind::kFirstCharOfAttr &&
        params.blocking.param >= db_a.schema().qid_arity()) {
      throw ConfigError("blocking attribute index out of range");
    }
  }
}

PartyLocal owner_local(PartyId party, const Database& db,
                       const std::string& context,
                       const std::optional<EncodingContext>& enc) {
  PartyLocal l;
  l.party = party;
  l.db_label = db.name();
  l.context_label = context;
  l.pd_columns = db.schema().pd_columns();
  for (const auto& r : db.records()) {
    l.record_ids.push_back(r.id.value());
    if (enc) l.encoded_ids.push_back(encode_record_id(r.id, enc->key).value());
  }
  return l;
}

}  // namespace

RunResult run_protocol(ProtocolVariant variant, const Database& db_a,
                       const Database& db_b, const RunParams& params) {
  validate(variant, db_a, db_b, params);

  std::optional<EncodingContext> enc;
  if (variant.mode == Mode::kPprl) enc = EncodingContext{*params.encoding, *params.key};

  RunLocals locals;
  locals.variant = variant;
  locals.merged_lu_dm = params.merge_lu_dm;
  locals.owners.push_back(owner_local(PartyId::kDoA, db_a, params.context_a, enc));
  locals.owners.push_back(owner_local(PartyId::kDoB, db_b, params.context_b, enc));
  if (enc) {
    std::set<std::string> eids;
    for (const auto& o : locals.owners) {
      for (const auto& e : o.encoded_ids) {
        if (!eids.insert(e).second) {
          throw IntegrityError("encoded record id collision");
        }
      }
    }
  }

  LinkConfig link{params.threshold, params.blocking, db_a.schema()};
  const PartyId lu_id = params.merge_lu_dm ? PartyId::kLuDm : PartyId::kLu;
  const PartyId dm_id = params.merge_lu_dm ? PartyId::kLuDm : PartyId::kDm;

  DataOwner owner_a(PartyId::kDoA, db_a, variant, enc, lu_id, dm_id);
  DataOwner owner_b(PartyId::kDoB, db_b, variant, enc, lu_id, dm_id);
  Sink sink;
  std::optional<LinkageUnit> lu;
  std::optional<DataMerger> dm;
  std::optional<MergedLinkageMerger> merged;

  Engine engine(variant, params.merge_lu_dm);
  engine.add(owner_a);
  engine.add(owner_b);
  engine.add(sink);
  if (params.merge_lu_dm) {
    merged.emplace(variant, link, params.project);
    engine.add(*merged);
  } else {
    lu.emplace(PartyId::kLu, variant, link, params.project, PartyId::kDm);
    dm.emplace(PartyId::kDm, variant, params.project);
    engine.add(*lu);
    engine.add(*dm);
  }

  RunResult result;
  locals.config_fingerprint = config_fingerprint(variant, db_a, db_b, params);
  result.transcript = engine.run(locals.config_fingerprint);
  locals.transcript_digest = result.transcript.digest();

  const LinkageUnit& lu_ref = merged ? merged->linkage_unit() : *lu;
  const DataMerger& dm_ref = merged ? merged->data_merger() : *dm;
  if (!sink.suf()) throw Error("run finished without a scientific use file");
  result.suf = *sink.suf();
  result.puf = da_anonymize(result.suf, params.sdc);
  result.lu_matches = lu_ref.matches();
  result.dm_state = dm_ref.state();
  result.locals = std::move(locals);
  return result;
}

}  // namespace linksim
