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

#include "linksim/audit/fact.h"

#include <array>
#include <utility>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

constexpr std::array<std::pair<FactKind, std::string_view>, 10> kNames{{
    {FactKind::kKnowsMatchStatusOfOwnRecord, "knows_match_status_of_own_record"},
    {FactKind::kSeesPlainQidOf, "sees_plain_qid_of"},
    {FactKind::kSeesPdOfMatched, "sees_pd_of_matched"},
    {FactKind::kSeesPdOfNonmatched, "sees_pd_of_nonmatched"},
    {FactKind::kSeesSimilarityScores, "sees_similarity_scores"},
    {FactKind::kSeesMatchCount, "sees_match_count"},
    {FactKind::kCanJoinQidToPd, "can_join_qid_to_pd"},
    {FactKind::kCanReconstructFullDatabases, "can_reconstruct_full_databases"},
    {FactKind::kEncodingParamsExposed, "encoding_params_exposed"},
    {FactKind::kGroupDisclosure, "group_disclosure"},
}};

std::string db_phrase(const std::string& db, const std::string& context) {
  if (context.empty()) return fmt::format("database '{}'", db);
  return fmt::format("database '{}' (context '{}')", db, context);
}

}  // namespace

std::string_view to_string(FactKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

FactKind parse_fact_kind(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  throw ParseError(fmt::format("unknown fact kind \"{}\"", text));
}

bool Fact::same_claim(const Fact& other) const {
  return kind == other.kind && db == other.db &&
         related_db == other.related_db && category == other.category;
}

std::string Fact::describe() const {
  const std::string on = db_phrase(db, context);
  switch (kind) {
    case FactKind::kKnowsMatchStatusOfOwnRecord:
      return fmt::format(
          "knows which of its {} records in {} matched against {}",
          subject.size(), on, db_phrase(related_db, related_context));
    case FactKind::kSeesPlainQidOf:
      return fmt::format("sees plain QID values of {} records of {}",
                         subject.size(), on);
    case FactKind::kSeesPdOfMatched:
      return fmt::format("sees payload data of matched records of {}", on);
    case FactKind::kSeesPdOfNonmatched:
      return fmt::format("sees payload data of non-matched records of {}", on);
    case FactKind::kSeesSimilarityScores:
      return "sees similarity scores between compared record pairs";
    case FactKind::kSeesMatchCount:
      return "sees how many record pairs were classified as matches";
    case FactKind::kCanJoinQidToPd:
      return fmt::format(
          "can attach payload data of {} to the QIDs of {} matched records",
          on, subject.size());
    case FactKind::kCanReconstructFullDatabases:
      return "can reconstruct both input databases (QIDs and payload data)";
    case FactKind::kEncodingParamsExposed:
      return fmt::format(
          "holds the encodings of {} together with the encoding parameters",
          on);
    case FactKind::kGroupDisclosure:
      return fmt::format(
          "group disclosure in {}: category '{}' matched at rate {:.3f} vs "
          "overall {:.3f}",
          on, category, rate, overall_rate);
  }
  return "?";
}

FactKindSet kinds_of(const std::vector<Fact>& facts) {
  FactKindSet out;
  for (const auto& f : facts) out.insert(f.kind);
  return out;
}

nlohmann::ordered_json fact_to_json(const Fact& fact) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(fact.kind);
  j["db"] = fact.db;
  j["context"] = fact.context;
  j["related_db"] = fact.related_db;
  j["related_context"] = fact.related_context;
  j["subject_count"] = fact.subject.size();
  j["subject"] = fact.subject;
  j["basis"] = fact.basis;
  if (fact.kind == FactKind::kGroupDisclosure) {
    j["category"] = fact.category;
    j["rate"] = fact.rate;
    j["overall_rate"] = fact.overall_rate;
  }
  j["description"] = fact.describe();
  return j;
}

Fact fact_from_json(const nlohmann::ordered_json& j) {
  try {
    Fact f;
    f.kind = parse_fact_kind(j.at("kind").get<std::string>());
    f.db = j.at("db").get<std::string>();
    f.context = j.at("context").get<std::string>();
    f.related_db = j.at("related_db").get<std::string>();
    f.related_context = j.at("related_context").get<std::string>();
    f.subject = j.at("subject").get<std::vector<std::string>>();
    f.basis = j.at("basis").get<std::vector<std::uint64_t>>();
    if (f.kind == FactKind::kGroupDisclosure) {
      f.category = j.at("category").get<std::string>();
      f.rate = j.at("rate").get<double>();
      f.overall_rate = j.at("overall_rate").get<double>();
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("fact: {}", e.what()));
  }
}

}  // namespace linksim
