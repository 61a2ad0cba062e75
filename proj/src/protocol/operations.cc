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

#include "linksim/protocol/operations.h"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "linksim/errors.h"
#include "linksim/linkage/similarity.h"

namespace linksim {

namespace {

const EncodingContext& require_enc(Mode mode, const EncodingContext* enc) {
  if (mode == Mode::kPprl && enc == nullptr) {
    throw ContractError("PPRL mode needs encoding parameters and a key");
  }
  return *enc;
}

// Wire identifier of every record: the id itself, or its keyed digest.
std::vector<std::string> wire_ids(const Database& db, Mode mode,
                                  const EncodingContext* enc) {
  std::vector<std::string> ids;
  ids.reserve(db.size());
  for (const auto& r : db.records()) {
    ids.push_back(mode == Mode::kTdl
                      ? r.id.value()
                      : encode_record_id(r.id, require_enc(mode, enc).key)
                            .value());
  }
  return ids;
}

}  // namespace

Payload do_prepare_step1(const Database& db, Mode mode,
                         const EncodingContext* enc) {
  if (mode == Mode::kTdl) {
    PlainQidList out;
    out.qid_names = db.schema().qid_names();
    for (const auto& r : db.records()) out.entries.emplace_back(r.id.value(), r.qid);
    return out;
  }
  const EncodingContext& ctx = require_enc(mode, enc);
  EncodedQidList out;
  out.params_fingerprint = params_fingerprint(ctx.params, ctx.key);
  for (auto& e : encode_database(db, ctx.params, ctx.key)) {
    out.entries.emplace_back(e.eid.value(), std::move(e.filter));
  }
  return out;
}

MatchSet lu_link(const Payload& step1_a, const Payload& step1_b, Mode mode,
                 const LinkConfig& config) {
  std::vector<ScoredPair> candidates;
  if (mode == Mode::kTdl) {
    const auto* a = std::get_if<PlainQidList>(&step1_a);
    const auto* b = std::get_if<PlainQidList>(&step1_b);
    if (!a || !b) throw ContractError("TDL linkage needs plain QID payloads");
    if (!config.schema) throw ContractError("TDL linkage needs a QID schema");
    std::vector<std::string> ka, kb;
    for (const auto& e : a->entries) ka.push_back(block_key(e.second, config.blocking));
    for (const auto& e : b->entries) kb.push_back(block_key(e.second, config.blocking));
    for (auto [i, j] : candidate_pairs(ka, kb)) {
      candidates.push_back(
          {a->entries[i].first, b->entries[j].first,
           plain_similarity(a->entries[i].second, b->entries[j].second,
                            *config.schema)});
    }
  } else {
    const auto* a = std::get_if<EncodedQidList>(&step1_a);
    const auto* b = std::get_if<EncodedQidList>(&step1_b);
    if (!a || !b) throw ContractError("PPRL linkage needs encoded payloads");
    std::vector<std::string> ka, kb;
    for (const auto& e : a->entries) ka.push_back(block_key(e.second, config.blocking));
    for (const auto& e : b->entries) kb.push_back(block_key(e.second, config.blocking));
    for (auto [i, j] : candidate_pairs(ka, kb)) {
      candidates.push_back({a->entries[i].first, b->entries[j].first,
                            bloom_dice(a->entries[i].second,
                                       b->entries[j].second)});
    }
  }
  return classify(std::move(candidates), config.threshold);
}

std::pair<MatchBackflow, MatchBackflow> lu_backflow(
    const MatchIdAssignment& assignment, Flow flow) {
  if (flow != Flow::kSeparation) {
    throw ContractError("no-backflow protocols never send match ids to owners");
  }
  std::pair<MatchBackflow, MatchBackflow> out;
  for (const auto& [mid, ids] : assignment.pairs) {
    out.first.entries.emplace_back(ids.first, mid.value());
    out.second.entries.emplace_back(ids.second, mid.value());
  }
  auto by_id = [](const auto& x, const auto& y) { return x < y; };
  std::sort(out.first.entries.begin(), out.first.entries.end(), by_id);
  std::sort(out.second.entries.begin(), out.second.entries.end(), by_id);
  return out;
}

MatchIdPairs lu_match_pairs(const MatchSet& matches) {
  MatchIdPairs out;
  for (const auto& p : matches.pairs()) out.entries.emplace_back(p.left, p.right);
  return out;
}

PdWithMid do_attach_pd(const Database& db, const MatchBackflow& backflow,
                       Mode mode, const EncodingContext* enc) {
  const auto ids = wire_ids(db, mode, enc);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < ids.size(); ++i) row_of.emplace(ids[i], i);

  PdWithMid out;
  out.columns = db.schema().pd_columns();
  for (const auto& [id, mid] : backflow.entries) {
    auto it = row_of.find(id);
    if (it == row_of.end()) {
      throw IntegrityError(fmt::format(
          "backflow names record \"{}\" unknown to database \"{}\"", id,
          db.name()));
    }
    out.entries.emplace_back(mid, db.records()[it->second].pd);
  }
  return out;
}

PdWithId do_send_all_pd(const Database& db, Mode mode,
                        const EncodingContext* enc) {
  const auto ids = wire_ids(db, mode, enc);
  PdWithId out;
  out.columns = db.schema().pd_columns();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.entries.emplace_back(ids[i], db.records()[i].pd);
  }
  return out;
}

Suf dm_merge_sep(const PdWithMid& pd_a, const PdWithMid& pd_b) {
  std::map<std::string, const std::vector<std::string>*> right;
  for (const auto& [mid, pd] : pd_b.entries) {
    if (!right.emplace(mid, &pd).second) {
      throw IntegrityError(fmt::format("match id \"{}\" repeats", mid));
    }
  }
  Suf suf{pd_a.columns, pd_b.columns, {}};
  std::set<std::string> seen;
  for (const auto& [mid, pd] : pd_a.entries) {
    auto it = right.find(mid);
    if (it == right.end()) {
      throw IntegrityError(
          fmt::format("match id \"{}\" arrived from one side only", mid));
    }
    if (!seen.insert(mid).second) {
      throw IntegrityError(fmt::format("match id \"{}\" repeats", mid));
    }
    suf.rows.push_back({mid, pd, *it->second});
  }
  for (const auto& [mid, pd] : pd_b.entries) {
    if (!seen.count(mid)) {
      throw IntegrityError(
          fmt::format("match id \"{}\" arrived from one side only", mid));
    }
  }
  return suf;
}

Suf dm_merge_nbf(const MatchIdPairs& pairs, const PdWithId& pd_a,
                 const PdWithId& pd_b, const std::string& project) {
  auto index = [](const PdWithId& p) {
    std::map<std::string, const std::vector<std::string>*> m;
    for (const auto& [id, pd] : p.entries) m.emplace(id, &pd);
    return m;
  };
  const auto left = index(pd_a);
  const auto right = index(pd_b);
  auto sorted = pairs.entries;
  std::sort(sorted.begin(), sorted.end());

  Suf suf{pd_a.columns, pd_b.columns, {}};
  std::size_t counter = 0;
  for (const auto& [l, r] : sorted) {
    auto li = left.find(l);
    auto ri = right.find(r);
    if (li == left.end() || ri == right.end()) {
      throw IntegrityError(fmt::format(
          "matched pair ({}, {}) has no payload row", l, r));
    }
    suf.rows.push_back(
        {make_match_id(project, counter++).value(), *li->second, *ri->second});
  }
  return suf;
}

}  // namespace linksim
