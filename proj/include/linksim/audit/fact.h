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

#ifndef LINKSIM_AUDIT_FACT_H_
#define LINKSIM_AUDIT_FACT_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace linksim {

// What a party could learn, symbolically. Facts describe legitimate access,
// not the outcome of an attack.
enum class FactKind {
  kKnowsMatchStatusOfOwnRecord,
  kSeesPlainQidOf,
  kSeesPdOfMatched,
  kSeesPdOfNonmatched,
  kSeesSimilarityScores,
  kSeesMatchCount,
  kCanJoinQidToPd,
  kCanReconstructFullDatabases,
  kEncodingParamsExposed,
  kGroupDisclosure,
};

std::string_view to_string(FactKind kind);
FactKind parse_fact_kind(std::string_view text);

using FactKindSet = std::set<FactKind>;

struct Fact {
  FactKind kind = FactKind::kSeesMatchCount;
  // Database the fact is about and its context label ("" when the fact is
  // not tied to one database).
  std::string db;
  std::string context;
  // The other database, for facts that relate two (match status is learnt
  // against the counterpart database).
  std::string related_db;
  std::string related_context;
  // Record ids the fact covers, when it is about specific records.
  std::vector<std::string> subject;
  // Sequence numbers of the messages the fact is derived from. Never empty.
  std::vector<std::uint64_t> basis;
  // Group disclosure only.
  std::string category;
  double rate = 0.0;
  double overall_rate = 0.0;

  // Identity ignoring the basis: kind, db, related db, category.
  bool same_claim(const Fact& other) const;
  std::string describe() const;
  bool operator==(const Fact&) const = default;
};

FactKindSet kinds_of(const std::vector<Fact>& facts);

nlohmann::ordered_json fact_to_json(const Fact& fact);
Fact fact_from_json(const nlohmann::ordered_json& j);

}  // namespace linksim

#endif  // LINKSIM_AUDIT_FACT_H_
