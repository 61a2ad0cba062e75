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

#include "linksim/protocol/party.h"

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

std::string_view to_string(PartyId party) {
  switch (party) {
    case PartyId::kDoA: return "DO_A";
    case PartyId::kDoB: return "DO_B";
    case PartyId::kLu: return "LU";
    case PartyId::kDm: return "DM";
    case PartyId::kOut: return "OUT";
    case PartyId::kLuDm: return "LU_DM";
  }
  return "?";
}

PartyId parse_party(std::string_view name) {
  for (auto p : {PartyId::kDoA, PartyId::kDoB, PartyId::kLu, PartyId::kDm,
                 PartyId::kOut, PartyId::kLuDm}) {
    if (to_string(p) == name) return p;
  }
  throw ParseError(fmt::format("unknown party \"{}\"", name));
}

bool is_data_owner(PartyId party) {
  return party == PartyId::kDoA || party == PartyId::kDoB;
}

bool acts_as_linkage_unit(PartyId party) {
  return party == PartyId::kLu || party == PartyId::kLuDm;
}

bool acts_as_data_merger(PartyId party) {
  return party == PartyId::kDm || party == PartyId::kLuDm;
}

int party_rank(PartyId party) {
  switch (party) {
    case PartyId::kDoA: return 0;
    case PartyId::kDoB: return 1;
    case PartyId::kLu: return 2;
    case PartyId::kLuDm: return 2;
    case PartyId::kDm: return 3;
    case PartyId::kOut: return 4;
  }
  return 5;
}

std::string_view to_string(Flow flow) {
  return flow == Flow::kSeparation ? "sep" : "nbf";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kTdl ? "tdl" : "pprl";
}

Flow parse_flow(std::string_view text) {
  if (text == "sep" || text == "separation_principle") return Flow::kSeparation;
  if (text == "nbf" || text == "no_backflow") return Flow::kNoBackflow;
  throw ConfigError(fmt::format("unknown protocol flow \"{}\"", text));
}

Mode parse_mode(std::string_view text) {
  if (text == "tdl") return Mode::kTdl;
  if (text == "pprl") return Mode::kPprl;
  throw ConfigError(fmt::format("unknown linkage mode \"{}\"", text));
}

std::string to_string(ProtocolVariant variant) {
  return fmt::format("{}-{}", to_string(variant.flow), to_string(variant.mode));
}

ProtocolVariant parse_variant(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw ConfigError(fmt::format("malformed variant \"{}\"", text));
  }
  return {parse_flow(text.substr(0, dash)), parse_mode(text.substr(dash + 1))};
}

const std::vector<ProtocolVariant>& all_variants() {
  static const std::vector<ProtocolVariant> kAll = {
      {Flow::kSeparation, Mode::kTdl},
      {Flow::kSeparation, Mode::kPprl},
      {Flow::kNoBackflow, Mode::kTdl},
      {Flow::kNoBackflow, Mode::kPprl}};
  return kAll;
}

}  // namespace linksim
