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

#include "linksim/audit/rules.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace linksim {

namespace {

PartyId other_owner(PartyId owner) {
  return owner == PartyId::kDoA ? PartyId::kDoB : PartyId::kDoA;
}

// Accumulates facts, folding repeated claims into one with the union of
// their bases and subjects.
class FactSet {
 public:
  explicit FactSet(const RunLocals& locals) : locals_(locals) {}

  Fact about(FactKind kind, PartyId owner) const {
    Fact f;
    f.kind = kind;
    if (const PartyLocal* l = locals_.owner(owner)) {
      f.db = l->db_label;
      f.context = l->context_label;
    }
    return f;
  }

  void relate(Fact& f, PartyId owner) const {
    if (const PartyLocal* l = locals_.owner(owner)) {
      f.related_db = l->db_label;
      f.related_context = l->context_label;
    }
  }

  void add(Fact f) {
    for (auto& existing : facts_) {
      if (existing.same_claim(f)) {
        merge(existing.basis, f.basis);
        merge(existing.subject, f.subject);
        return;
      }
    }
    normalize(f.basis);
    normalize(f.subject);
    facts_.push_back(std::move(f));
  }

  std::vector<Fact> take() {
    std::sort(facts_.begin(), facts_.end(), [](const Fact& a, const Fact& b) {
      return std::tie(a.kind, a.db, a.related_db, a.category) <
             std::tie(b.kind, b.db, b.related_db, b.category);
    });
    return std::move(facts_);
  }

 private:
  template <typename T>
  static void normalize(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  template <typename T>
  static void merge(std::vector<T>& into, const std::vector<T>& from) {
    into.insert(into.end(), from.begin(), from.end());
    normalize(into);
  }

  const RunLocals& locals_;
  std::vector<Fact> facts_;
};

const Message* find_from(const std::vector<Message>& msgs, PartyId sender,
                         PayloadKind kind) {
  for (const auto& m : msgs) {
    if (m.sender == sender && m.kind() == kind) return &m;
  }
  return nullptr;
}

const Message* find_to(const std::vector<Message>& msgs, PartyId receiver,
                       PayloadKind kind) {
  for (const auto& m : msgs) {
    if (m.receiver == receiver && m.kind() == kind) return &m;
  }
  return nullptr;
}

const Message* find_kind(const std::vector<Message>& msgs, PayloadKind kind) {
  for (const auto& m : msgs) {
    if (m.kind() == kind) return &m;
  }
  return nullptr;
}

// Maps the identifiers an owner's records travel under back to record ids.
std::map<std::string, std::string> wire_to_record(const PartyLocal& own) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < own.record_ids.size(); ++i) {
    out.emplace(own.record_ids[i], own.record_ids[i]);
    if (i < own.encoded_ids.size()) {
      out.emplace(own.encoded_ids[i], own.record_ids[i]);
    }
  }
  return out;
}

void owner_with_linkage_unit(const ObservationSet& owner,
                             const ObservationSet& lu, FactSet& out) {
  const PartyId self = owner.party;
  const PartyId other = other_owner(self);
  const Message* own_plain =
      find_from(lu.received, self, PayloadKind::kIdQidList);
  const Message* other_step1 =
      find_from(lu.received, other, PayloadKind::kIdQidList);
  if (other_step1 == nullptr) return;

  if (const auto* plain = std::get_if<PlainQidList>(&other_step1->payload)) {
    Fact f = out.about(FactKind::kSeesPlainQidOf, other);
    for (const auto& e : plain->entries) f.subject.push_back(e.first);
    f.basis = {other_step1->seq};
    out.add(std::move(f));

    if (own_plain && std::holds_alternative<PlainQidList>(own_plain->payload) &&
        owner.own_data) {
      Fact s = out.about(FactKind::kKnowsMatchStatusOfOwnRecord, self);
      out.relate(s, other);
      s.subject = owner.own_data->record_ids;
      s.basis = {own_plain->seq, other_step1->seq};
      out.add(std::move(s));
    }
  } else if (owner.own_data && !owner.own_data->encoded_ids.empty()) {
    // The owner holds the key and parameters the encodings were built with.
    Fact f = out.about(FactKind::kEncodingParamsExposed, other);
    f.basis = {other_step1->seq};
    out.add(std::move(f));
  }
}

void owner_with_data_merger(const ObservationSet& owner,
                            const ObservationSet& dm, FactSet& out) {
  if (!owner.own_data) return;
  const PartyId self = owner.party;
  const PartyId other = other_owner(self);
  const auto to_record = wire_to_record(*owner.own_data);

  // Separation principle: match ids the owner got back meet the other
  // side's payload at the merger.
  if (const Message* bf = find_kind(owner.received, PayloadKind::kMatchBackflow)) {
    const Message* pd = find_from(dm.received, other, PayloadKind::kPdWithMid);
    if (pd) {
      std::set<std::string> mids;
      for (const auto& e : std::get<PdWithMid>(pd->payload).entries) {
        mids.insert(e.first);
      }
      Fact f = out.about(FactKind::kCanJoinQidToPd, other);
      out.relate(f, self);
      for (const auto& [id, mid] : std::get<MatchBackflow>(bf->payload).entries) {
        auto it = to_record.find(id);
        if (mids.count(mid) && it != to_record.end()) f.subject.push_back(it->second);
      }
      f.basis = {bf->seq, pd->seq};
      out.add(std::move(f));
    }
  }

  // No backflow: M^id at the merger names the owner's own (encoded) ids.
  const Message* pairs = find_kind(dm.received, PayloadKind::kMatchIdPairs);
  const Message* pd = find_from(dm.received, other, PayloadKind::kPdWithId);
  if (pairs && pd) {
    std::set<std::string> other_ids;
    for (const auto& e : std::get<PdWithId>(pd->payload).entries) {
      other_ids.insert(e.first);
    }
    Fact f = out.about(FactKind::kCanJoinQidToPd, other);
    out.relate(f, self);
    for (const auto& [l, r] : std::get<MatchIdPairs>(pairs->payload).entries) {
      const std::string& mine = self == PartyId::kDoA ? l : r;
      const std::string& theirs = self == PartyId::kDoA ? r : l;
      auto it = to_record.find(mine);
      if (it != to_record.end() && other_ids.count(theirs)) {
        f.subject.push_back(it->second);
      }
    }
    f.basis = {pairs->seq, pd->seq};
    out.add(std::move(f));
  }
}

void linkage_unit_with_data_merger(const ObservationSet& lu,
                                   const ObservationSet& dm, FactSet& out) {
  std::vector<std::uint64_t> full_basis;
  int full = 0;
  for (PartyId owner : {PartyId::kDoA, PartyId::kDoB}) {
    const Message* q = find_from(lu.received, owner, PayloadKind::kIdQidList);
    if (!q) continue;
    const auto* plain = std::get_if<PlainQidList>(&q->payload);
    if (!plain) continue;  // encoded QIDs cannot be attached to anyone

    Fact f = out.about(FactKind::kCanJoinQidToPd, owner);
    if (const Message* bf = find_to(lu.sent, owner, PayloadKind::kMatchBackflow)) {
      const Message* pd = find_from(dm.received, owner, PayloadKind::kPdWithMid);
      if (!pd) continue;
      std::set<std::string> mids;
      for (const auto& e : std::get<PdWithMid>(pd->payload).entries) {
        mids.insert(e.first);
      }
      for (const auto& [id, mid] : std::get<MatchBackflow>(bf->payload).entries) {
        if (mids.count(mid)) f.subject.push_back(id);
      }
      f.basis = {q->seq, bf->seq, pd->seq};
      out.add(std::move(f));
    } else if (const Message* pd =
                   find_from(dm.received, owner, PayloadKind::kPdWithId)) {
      std::set<std::string> with_pd;
      for (const auto& e : std::get<PdWithId>(pd->payload).entries) {
        with_pd.insert(e.first);
      }
      std::size_t covered = 0;
      for (const auto& e : plain->entries) {
        if (with_pd.count(e.first)) {
          f.subject.push_back(e.first);
          ++covered;
        }
      }
      f.basis = {q->seq, pd->seq};
      out.add(std::move(f));
      if (covered == plain->entries.size()) {
        ++full;
        full_basis.push_back(q->seq);
        full_basis.push_back(pd->seq);
      }
    }
  }
  if (full == 2) {
    Fact f;
    f.kind = FactKind::kCanReconstructFullDatabases;
    f.basis = std::move(full_basis);
    out.add(std::move(f));
  }
}

}  // namespace

std::vector<Fact> merge_facts(std::vector<Fact> facts) {
  RunLocals none;
  FactSet out(none);
  for (auto& f : facts) out.add(std::move(f));
  return out.take();
}

std::vector<Fact> derive_facts(const ObservationSet& obs,
                               const RunLocals& locals) {
  FactSet out(locals);
  std::vector<std::uint64_t> step1;
  std::set<PartyId> step1_from;

  for (const auto& m : obs.received) {
    switch (m.kind()) {
      case PayloadKind::kIdQidList: {
        step1.push_back(m.seq);
        step1_from.insert(m.sender);
        if (const auto* plain = std::get_if<PlainQidList>(&m.payload)) {
          Fact f = out.about(FactKind::kSeesPlainQidOf, m.sender);
          for (const auto& e : plain->entries) f.subject.push_back(e.first);
          f.basis = {m.seq};
          out.add(std::move(f));
        }
        break;
      }
      case PayloadKind::kMatchBackflow: {
        if (is_data_owner(obs.party) && obs.own_data) {
          Fact f = out.about(FactKind::kKnowsMatchStatusOfOwnRecord, obs.party);
          out.relate(f, other_owner(obs.party));
          f.subject = obs.own_data->record_ids;
          f.basis = {m.seq};
          out.add(std::move(f));
        } else {
          Fact f;
          f.kind = FactKind::kSeesMatchCount;
          f.basis = {m.seq};
          out.add(std::move(f));
        }
        break;
      }
      case PayloadKind::kMatchIdPairs: {
        Fact f;
        f.kind = FactKind::kSeesMatchCount;
        f.basis = {m.seq};
        out.add(std::move(f));
        break;
      }
      case PayloadKind::kPdWithMid: {
        Fact f = out.about(FactKind::kSeesPdOfMatched, m.sender);
        f.basis = {m.seq};
        out.add(std::move(f));
        break;
      }
      case PayloadKind::kPdWithId: {
        Fact matched = out.about(FactKind::kSeesPdOfMatched, m.sender);
        matched.basis = {m.seq};
        out.add(std::move(matched));
        Fact all = out.about(FactKind::kSeesPdOfNonmatched, m.sender);
        all.basis = {m.seq};
        out.add(std::move(all));
        break;
      }
      case PayloadKind::kSufFile: {
        for (PartyId owner : {PartyId::kDoA, PartyId::kDoB}) {
          Fact f = out.about(FactKind::kSeesPdOfMatched, owner);
          f.basis = {m.seq};
          out.add(std::move(f));
        }
        break;
      }
      case PayloadKind::kPufFile:
        break;
    }
  }

  if (step1_from.count(PartyId::kDoA) && step1_from.count(PartyId::kDoB)) {
    for (FactKind kind :
         {FactKind::kSeesSimilarityScores, FactKind::kSeesMatchCount}) {
      Fact f;
      f.kind = kind;
      f.basis = step1;
      out.add(std::move(f));
    }
  }
  return out.take();
}

std::vector<Fact> derive_collusion_facts(const ObservationSet& x,
                                         const ObservationSet& y,
                                         const RunLocals& locals) {
  FactSet out(locals);
  const bool same = &x == &y || x.party == y.party;
  for (auto [p, q] : {std::pair{&x, &y}, std::pair{&y, &x}}) {
    if (!same && is_data_owner(p->party)) {
      if (acts_as_linkage_unit(q->party)) owner_with_linkage_unit(*p, *q, out);
      if (acts_as_data_merger(q->party)) owner_with_data_merger(*p, *q, out);
    }
    if (acts_as_linkage_unit(p->party) && acts_as_data_merger(q->party) &&
        (same || p->party != q->party)) {
      linkage_unit_with_data_merger(*p, *q, out);
    }
  }
  return out.take();
}

}  // namespace linksim
