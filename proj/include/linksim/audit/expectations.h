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

#ifndef LINKSIM_AUDIT_EXPECTATIONS_H_
#define LINKSIM_AUDIT_EXPECTATIONS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linksim/audit/fact.h"
#include "linksim/protocol/party.h"

namespace linksim {

// Row of the leakage matrix a party is judged under.
enum class Role { kDataOwner, kLinkageUnit, kDataMerger, kOutput };

std::string_view to_string(Role role);  // "DO", "LU", "DM", "OUT"
Role parse_role(std::string_view text);
// Rows a party is judged under: one, or two for the merged LU_DM.
std::vector<Role> roles_of(PartyId party);

// Fact kinds each role may learn on its own, per variant.
class ExpectationMatrix {
 public:
  static ExpectationMatrix defaults();

  void set(ProtocolVariant variant, Role role, FactKindSet kinds);
  void erase(ProtocolVariant variant, Role role);
  const FactKindSet* find(ProtocolVariant variant, Role role) const;
  // Union of the rows for every role the party plays; nullopt if any row
  // is absent.
  std::optional<FactKindSet> expected_for(ProtocolVariant variant,
                                          PartyId party) const;

  nlohmann::ordered_json to_json() const;
  static ExpectationMatrix from_json(const nlohmann::ordered_json& j);
  static ExpectationMatrix load(const std::filesystem::path& path);

  bool operator==(const ExpectationMatrix&) const = default;

 private:
  std::map<std::pair<std::string, Role>, FactKindSet> cells_;
};

// Fact kinds that only two parties together can derive, per variant and
// unordered pair of parties.
class CollusionExpectations {
 public:
  static CollusionExpectations defaults();

  void set(ProtocolVariant variant, PartyId x, PartyId y, FactKindSet kinds);
  const FactKindSet* find(ProtocolVariant variant, PartyId x, PartyId y) const;

  nlohmann::ordered_json to_json() const;
  static CollusionExpectations from_json(const nlohmann::ordered_json& j);
  static CollusionExpectations load(const std::filesystem::path& path);

  bool operator==(const CollusionExpectations&) const = default;

 private:
  static std::pair<PartyId, PartyId> key(PartyId x, PartyId y);
  std::map<std::tuple<std::string, PartyId, PartyId>, FactKindSet> cells_;
};

// Every unordered pair of distinct parties drawn from the owners, the
// linkage unit and the data merger.
std::vector<std::pair<PartyId, PartyId>> collusion_pairs(bool merged_lu_dm);

}  // namespace linksim

#endif  // LINKSIM_AUDIT_EXPECTATIONS_H_
