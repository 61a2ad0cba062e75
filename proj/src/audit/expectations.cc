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

#include "linksim/audit/expectations.h"

#include <fstream>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

using K = FactKind;

nlohmann::ordered_json kinds_json(const FactKindSet& kinds) {
  auto arr = nlohmann::ordered_json::array();
  for (FactKind k : kinds) arr.push_back(std::string(to_string(k)));
  return arr;
}

FactKindSet kinds_from_json(const nlohmann::ordered_json& j) {
  FactKindSet out;
  for (const auto& k : j) out.insert(parse_fact_kind(k.get<std::string>()));
  return out;
}

nlohmann::ordered_json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("malformed {}: {}", what, e.what()));
  }
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kDataOwner: return "DO";
    case Role::kLinkageUnit: return "LU";
    case Role::kDataMerger: return "DM";
    case Role::kOutput: return "OUT";
  }
  return "?";
}

Role parse_role(std::string_view text) {
  for (Role r : {Role::kDataOwner, Role::kLinkageUnit, Role::kDataMerger,
                 Role::kOutput}) {
    if (to_string(r) == text) return r;
  }
  throw ParseError(fmt::format("unknown role \"{}\"", text));
}

std::vector<Role> roles_of(PartyId party) {
  switch (party) {
    case PartyId::kDoA:
    case PartyId::kDoB: return {Role::kDataOwner};
    case PartyId::kLu: return {Role::kLinkageUnit};
    case PartyId::kDm: return {Role::kDataMerger};
    case PartyId::kLuDm: return {Role::kLinkageUnit, Role::kDataMerger};
    case PartyId::kOut: return {Role::kOutput};
  }
  return {};
}

ExpectationMatrix ExpectationMatrix::defaults() {
  ExpectationMatrix m;
  for (ProtocolVariant v : all_variants()) {
    const bool sep = v.flow == Flow::kSeparation;
    const bool tdl = v.mode == Mode::kTdl;
    m.set(v, Role::kDataOwner,
          sep ? FactKindSet{K::kKnowsMatchStatusOfOwnRecord} : FactKindSet{});
    FactKindSet lu{K::kSeesSimilarityScores, K::kSeesMatchCount};
    if (tdl) lu.insert(K::kSeesPlainQidOf);
    m.set(v, Role::kLinkageUnit, lu);
    m.set(v, Role::kDataMerger,
          sep ? FactKindSet{K::kSeesPdOfMatched}
              : FactKindSet{K::kSeesPdOfMatched, K::kSeesPdOfNonmatched,
                            K::kSeesMatchCount});
    m.set(v, Role::kOutput, {K::kSeesPdOfMatched});
  }
  return m;
}

void ExpectationMatrix::set(ProtocolVariant variant, Role role,
                            FactKindSet kinds) {
  cells_[{to_string(variant), role}] = std::move(kinds);
}

void ExpectationMatrix::erase(ProtocolVariant variant, Role role) {
  cells_.erase({to_string(variant), role});
}

const FactKindSet* ExpectationMatrix::find(ProtocolVariant variant,
                                           Role role) const {
  auto it = cells_.find({to_string(variant), role});
  return it == cells_.end() ? nullptr : &it->second;
}

std::optional<FactKindSet> ExpectationMatrix::expected_for(
    ProtocolVariant variant, PartyId party) const {
  FactKindSet out;
  for (Role r : roles_of(party)) {
    const FactKindSet* cell = find(variant, r);
    if (!cell) return std::nullopt;
    out.insert(cell->begin(), cell->end());
  }
  return out;
}

nlohmann::ordered_json ExpectationMatrix::to_json() const {
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, kinds] : cells_) {
    nlohmann::ordered_json c;
    c["variant"] = key.first;
    c["role"] = std::string(to_string(key.second));
    c["facts"] = kinds_json(kinds);
    cells.push_back(std::move(c));
  }
  nlohmann::ordered_json j;
  j["cells"] = std::move(cells);
  return j;
}

ExpectationMatrix ExpectationMatrix::from_json(const nlohmann::ordered_json& j) {
  return guarded("expectation matrix", [&] {
    ExpectationMatrix m;
    for (const auto& c : j.at("cells")) {
      m.set(parse_variant(c.at("variant").get<std::string>()),
            parse_role(c.at("role").get<std::string>()),
            kinds_from_json(c.at("facts")));
    }
    return m;
  });
}

ExpectationMatrix ExpectationMatrix::load(const std::filesystem::path& path) {
  return from_json(read_json(path));
}

CollusionExpectations CollusionExpectations::defaults() {
  CollusionExpectations c;
  for (ProtocolVariant v : all_variants()) {
    const bool tdl = v.mode == Mode::kTdl;
    const FactKindSet with_lu =
        tdl ? FactKindSet{K::kSeesPlainQidOf, K::kKnowsMatchStatusOfOwnRecord}
            : FactKindSet{K::kEncodingParamsExposed};
    const FactKindSet with_dm{K::kCanJoinQidToPd};
    FactKindSet lu_dm;
    if (tdl) {
      lu_dm.insert(K::kCanJoinQidToPd);
      if (v.flow == Flow::kNoBackflow) {
        lu_dm.insert(K::kCanReconstructFullDatabases);
      }
    }
    c.set(v, PartyId::kDoA, PartyId::kDoB, {});
    for (PartyId owner : {PartyId::kDoA, PartyId::kDoB}) {
      c.set(v, owner, PartyId::kLu, with_lu);
      c.set(v, owner, PartyId::kDm, with_dm);
      if (tdl) {
        FactKindSet both = with_lu;
        both.insert(with_dm.begin(), with_dm.end());
        c.set(v, owner, PartyId::kLuDm, both);
      }
    }
    c.set(v, PartyId::kLu, PartyId::kDm, lu_dm);
  }
  return c;
}

std::pair<PartyId, PartyId> CollusionExpectations::key(PartyId x, PartyId y) {
  if (party_rank(y) < party_rank(x)) std::swap(x, y);
  return {x, y};
}

void CollusionExpectations::set(ProtocolVariant variant, PartyId x, PartyId y,
                                FactKindSet kinds) {
  auto [a, b] = key(x, y);
  cells_[{to_string(variant), a, b}] = std::move(kinds);
}

const FactKindSet* CollusionExpectations::find(ProtocolVariant variant,
                                               PartyId x, PartyId y) const {
  auto [a, b] = key(x, y);
  auto it = cells_.find({to_string(variant), a, b});
  return it == cells_.end() ? nullptr : &it->second;
}

nlohmann::ordered_json CollusionExpectations::to_json() const {
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, kinds] : cells_) {
    nlohmann::ordered_json c;
    c["variant"] = std::get<0>(key);
    c["parties"] = {std::string(to_string(std::get<1>(key))),
                    std::string(to_string(std::get<2>(key)))};
    c["emergent"] = kinds_json(kinds);
    cells.push_back(std::move(c));
  }
  nlohmann::ordered_json j;
  j["cells"] = std::move(cells);
  return j;
}

CollusionExpectations CollusionExpectations::from_json(
    const nlohmann::ordered_json& j) {
  return guarded("collusion expectations", [&] {
    CollusionExpectations c;
    for (const auto& cell : j.at("cells")) {
      const auto& parties = cell.at("parties");
      if (parties.size() != 2) {
        throw ParseError("collusion cell must name exactly two parties");
      }
      c.set(parse_variant(cell.at("variant").get<std::string>()),
            parse_party(parties[0].get<std::string>()),
            parse_party(parties[1].get<std::string>()),
            kinds_from_json(cell.at("emergent")));
    }
    return c;
  });
}

CollusionExpectations CollusionExpectations::load(
    const std::filesystem::path& path) {
  return from_json(read_json(path));
}

std::vector<std::pair<PartyId, PartyId>> collusion_pairs(bool merged_lu_dm) {
  std::vector<PartyId> who{PartyId::kDoA, PartyId::kDoB};
  if (merged_lu_dm) {
    who.push_back(PartyId::kLuDm);
  } else {
    who.push_back(PartyId::kLu);
    who.push_back(PartyId::kDm);
  }
  std::vector<std::pair<PartyId, PartyId>> out;
  for (std::size_t i = 0; i < who.size(); ++i) {
    for (std::size_t j = i + 1; j < who.size(); ++j) {
      out.emplace_back(who[i], who[j]);
    }
  }
  return out;
}

}  // namespace linksim
