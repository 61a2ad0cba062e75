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

#ifndef LINKSIM_PROTOCOL_PARTY_H_
#define LINKSIM_PROTOCOL_PARTY_H_

#include <string>
#include <string_view>
#include <vector>

namespace linksim {

// kLuDm is the single party that results from merging the linkage unit and
// the data merger (TDL only). kOut is the step-4 sink: a data anonymiser or
// an approved data user.
enum class PartyId { kDoA, kDoB, kLu, kDm, kOut, kLuDm };

std::string_view to_string(PartyId party);
// Throws ParseError for an unknown name.
PartyId parse_party(std::string_view name);

bool is_data_owner(PartyId party);
bool acts_as_linkage_unit(PartyId party);
bool acts_as_data_merger(PartyId party);

// Scheduling rank; lower sends first when steps tie.
int party_rank(PartyId party);

enum class Flow { kSeparation, kNoBackflow };
enum class Mode { kTdl, kPprl };

struct ProtocolVariant {
  Flow flow = Flow::kSeparation;
  Mode mode = Mode::kTdl;

  bool operator==(const ProtocolVariant&) const = default;
};

// "sep-tdl", "sep-pprl", "nbf-tdl", "nbf-pprl".
std::string to_string(ProtocolVariant variant);
ProtocolVariant parse_variant(std::string_view text);
std::string_view to_string(Flow flow);
std::string_view to_string(Mode mode);
Flow parse_flow(std::string_view text);
Mode parse_mode(std::string_view text);

const std::vector<ProtocolVariant>& all_variants();

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_PARTY_H_
