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

#include "linksim/audit/auditor.h"

#include <algorithm>
#include <functional>
#include <set>

#include <fmt/format.h>

#include "linksim/audit/observations.h"
#include "linksim/audit/rules.h"
#include "linksim/errors.h"
#include "linksim/protocol/steps.h"

namespace linksim {

namespace {

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

nlohmann::ordered_json facts_json(const std::vector<Fact>& facts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : facts) arr.push_back(fact_to_json(f));
  return arr;
}

std::vector<Fact> facts_from_json(const nlohmann::ordered_json& j) {
  std::vector<Fact> out;
  for (const auto& f : j) out.push_back(fact_from_json(f));
  return out;
}

// Accumulates a comparison of actual against expected kinds.
void compare(Verdict& v, const FactKindSet& actual, const FactKindSet& expected) {
  std::set_difference(actual.begin(), actual.end(), expected.begin(),
                      expected.end(), std::inserter(v.extra, v.extra.end()));
  std::set_difference(expected.begin(), expected.end(), actual.begin(),
                      actual.end(),
                      std::inserter(v.missing, v.missing.end()));
}

void finish(Verdict& v) {
  if (v.status == VerdictStatus::kUnchecked) return;
  v.status = v.extra.empty() && v.missing.empty() ? VerdictStatus::kAsExpected
                                                   : VerdictStatus::kDeviates;
}

Transcript without(const Transcript& t, const std::vector<std::uint64_t>& seqs) {
  Transcript out = t;
  std::erase_if(out.messages, [&](const Message& m) {
    return std::find(seqs.begin(), seqs.end(), m.seq) != seqs.end();
  });
  return out;
}

void annotate_inbox(const ObservationSet& obs, ProtocolVariant variant,
                    bool merged, std::vector<std::string>& notes) {
  for (const auto& m : obs.received) {
    if (auto why = check_message(variant, merged, m)) {
      notes.push_back(fmt::format("message {} ({} -> {}, {}) is outside the "
                                  "protocol: {}",
                                  m.seq, to_string(m.sender),
                                  to_string(m.receiver), to_string(m.kind()),
                                  *why));
    }
  }
}

bool group_applies(const Transcript& t, PartyId party,
                   const AuditOptions& options) {
  return options.category_attr && acts_as_data_merger(party) &&
         t.variant.flow == Flow::kNoBackflow;
}

}  // namespace

std::string_view to_string(AuditMode mode) {
  switch (mode) {
    case AuditMode::kFullyTrusted: return "fully_trusted";
    case AuditMode::kHbc: return "hbc";
    case AuditMode::kHbcCollusion: return "hbc_collusion";
  }
  return "?";
}

AuditMode parse_audit_mode(std::string_view text) {
  for (AuditMode m : {AuditMode::kFullyTrusted, AuditMode::kHbc,
                      AuditMode::kHbcCollusion}) {
    if (to_string(m) == text) return m;
  }
  throw ParseError(fmt::format("unknown audit mode \"{}\"", text));
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kAsExpected: return "as_expected";
    case VerdictStatus::kDeviates: return "deviates";
    case VerdictStatus::kUnchecked: return "unchecked";
  }
  return "?";
}

std::string LeakageReport::name() const {
  std::string who;
  for (PartyId p : parties) {
    if (!who.empty()) who += '+';
    who += to_string(p);
  }
  return fmt::format("{}.{}", to_string(variant), who);
}

nlohmann::ordered_json report_to_json(const LeakageReport& r) {
  nlohmann::ordered_json j;
  j["variant"] = to_string(r.variant);
  j["merged_lu_dm"] = r.merged_lu_dm;
  auto parties = nlohmann::ordered_json::array();
  for (PartyId p : r.parties) parties.push_back(std::string(to_string(p)));
  j["parties"] = std::move(parties);
  j["facts"] = facts_json(r.facts);
  j["collusion_facts"] = facts_json(r.collusion_facts);
  j["group_facts"] = facts_json(r.group_facts);
  nlohmann::ordered_json v;
  v["status"] = std::string(to_string(r.verdict.status));
  v["extra"] = kinds_json(r.verdict.extra);
  v["missing"] = kinds_json(r.verdict.missing);
  j["verdict_vs_expectation"] = std::move(v);
  j["annotations"] = r.annotations;
  return j;
}

LeakageReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    LeakageReport r;
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.merged_lu_dm = j.at("merged_lu_dm").get<bool>();
    for (const auto& p : j.at("parties")) {
      r.parties.push_back(parse_party(p.get<std::string>()));
    }
    r.facts = facts_from_json(j.at("facts"));
    r.collusion_facts = facts_from_json(j.at("collusion_facts"));
    r.group_facts = facts_from_json(j.at("group_facts"));
    const auto& v = j.at("verdict_vs_expectation");
    const std::string status = v.at("status").get<std::string>();
    if (status == "as_expected") {
      r.verdict.status = VerdictStatus::kAsExpected;
    } else if (status == "deviates") {
      r.verdict.status = VerdictStatus::kDeviates;
    } else if (status == "unchecked") {
      r.verdict.status = VerdictStatus::kUnchecked;
    } else {
      throw ParseError(fmt::format("unknown verdict \"{}\"", status));
    }
    r.verdict.extra = kinds_from_json(v.at("extra"));
    r.verdict.missing = kinds_from_json(v.at("missing"));
    r.annotations = j.at("annotations").get<std::vector<std::string>>();
    if (r.parties.empty() || r.parties.size() > 2) {
      throw ParseError("a report names one or two parties");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("malformed report: {}", e.what()));
  }
}

void check_integrity(const Transcript& transcript, const RunLocals& locals) {
  if (!(transcript.variant == locals.variant) ||
      transcript.merged_lu_dm != locals.merged_lu_dm) {
    throw IntegrityError("transcript and run metadata describe different runs");
  }
  if (!locals.config_fingerprint.empty() &&
      transcript.config_fingerprint != locals.config_fingerprint) {
    throw IntegrityError(fmt::format(
        "config fingerprint mismatch: transcript {} vs run metadata {}",
        transcript.config_fingerprint, locals.config_fingerprint));
  }
  const std::string digest = transcript.digest();
  if (digest != locals.transcript_digest) {
    throw IntegrityError(fmt::format(
        "transcript digest {} does not match the recorded {}; the transcript "
        "was altered after the run",
        digest, locals.transcript_digest));
  }
}

LeakageReport audit_single(const Transcript& transcript, PartyId party,
                           const RunLocals& locals,
                           const AuditOptions& options) {
  const ObservationSet obs = observations(transcript, party, locals);
  LeakageReport r;
  r.variant = transcript.variant;
  r.merged_lu_dm = transcript.merged_lu_dm;
  r.parties = {party};
  r.facts = derive_facts(obs, locals);
  const bool merged_party =
      acts_as_linkage_unit(party) && acts_as_data_merger(party);
  if (merged_party) r.collusion_facts = derive_collusion_facts(obs, obs, locals);
  annotate_inbox(obs, transcript.variant, transcript.merged_lu_dm,
                 r.annotations);

  if (group_applies(transcript, party, options)) {
    r.group_facts = group_disclosure(obs, transcript.variant, locals,
                                     *options.category_attr,
                                     options.flag_threshold);
  }

  if (auto expected = options.matrix.expected_for(transcript.variant, party)) {
    r.verdict.status = VerdictStatus::kAsExpected;
    compare(r.verdict, kinds_of(r.facts), *expected);
    if (merged_party) {
      const FactKindSet* joint = options.collusion.find(
          transcript.variant, PartyId::kLu, PartyId::kDm);
      compare(r.verdict, kinds_of(r.collusion_facts),
              joint ? *joint : FactKindSet{});
    }
    finish(r.verdict);
  }

  if (options.check_basis) {
    for (auto& note : basis_violations(transcript, locals, r, options)) {
      r.annotations.push_back(std::move(note));
    }
  }
  return r;
}

LeakageReport audit_collusion(const Transcript& transcript, PartyId x,
                              PartyId y, const RunLocals& locals,
                              const AuditOptions& options) {
  if (x == y) {
    throw ContractError(fmt::format("collusion needs two distinct parties, "
                                    "got {} twice",
                                    to_string(x)));
  }
  if (party_rank(y) < party_rank(x)) std::swap(x, y);
  const ObservationSet ox = observations(transcript, x, locals);
  const ObservationSet oy = observations(transcript, y, locals);
  LeakageReport r;
  r.variant = transcript.variant;
  r.merged_lu_dm = transcript.merged_lu_dm;
  r.parties = {x, y};
  std::vector<Fact> both = derive_facts(ox, locals);
  for (auto& f : derive_facts(oy, locals)) both.push_back(std::move(f));
  r.facts = merge_facts(std::move(both));
  r.collusion_facts = derive_collusion_facts(ox, oy, locals);
  annotate_inbox(ox, transcript.variant, transcript.merged_lu_dm,
                 r.annotations);
  annotate_inbox(oy, transcript.variant, transcript.merged_lu_dm,
                 r.annotations);

  if (const FactKindSet* expected =
          options.collusion.find(transcript.variant, x, y)) {
    r.verdict.status = VerdictStatus::kAsExpected;
    compare(r.verdict, kinds_of(r.collusion_facts), *expected);
    finish(r.verdict);
  }
  if (options.check_basis) {
    for (auto& note : basis_violations(transcript, locals, r, options)) {
      r.annotations.push_back(std::move(note));
    }
  }
  return r;
}

std::vector<LeakageReport> audit_run(const Transcript& transcript,
                                     const RunLocals& locals,
                                     const AuditOptions& options) {
  std::vector<LeakageReport> out;
  if (options.mode == AuditMode::kFullyTrusted) return out;
  for (PartyId p : participants(transcript.variant, transcript.merged_lu_dm)) {
    out.push_back(audit_single(transcript, p, locals, options));
  }
  if (options.mode == AuditMode::kHbcCollusion) {
    for (auto [x, y] : collusion_pairs(transcript.merged_lu_dm)) {
      out.push_back(audit_collusion(transcript, x, y, locals, options));
    }
  }
  return out;
}

std::vector<std::string> basis_violations(const Transcript& transcript,
                                          const RunLocals& locals,
                                          const LeakageReport& report,
                                          const AuditOptions& options) {
  using Derive = std::function<std::vector<Fact>(const Transcript&)>;
  std::vector<std::string> out;
  auto check = [&](const std::vector<Fact>& facts, const Derive& derive,
                   std::string_view label) {
    for (const auto& f : facts) {
      if (f.basis.empty()) {
        out.push_back(fmt::format("{} fact without basis: {}", label,
                                  f.describe()));
        continue;
      }
      std::vector<Fact> again;
      try {
        again = derive(without(transcript, f.basis));
      } catch (const ContractError&) {
        continue;  // the analysis itself is impossible without the basis
      }
      for (const auto& g : again) {
        if (g.same_claim(f)) {
          out.push_back(fmt::format("{} fact survives removal of its basis: {}",
                                    label, f.describe()));
          break;
        }
      }
    }
  };

  const PartyId x = report.parties.front();
  if (report.parties.size() == 1) {
    check(report.facts,
          [&](const Transcript& t) {
            return derive_facts(observations(t, x, locals), locals);
          },
          "single");
    check(report.collusion_facts,
          [&](const Transcript& t) {
            const auto o = observations(t, x, locals);
            return derive_collusion_facts(o, o, locals);
          },
          "joint");
    if (group_applies(transcript, x, options)) {
      check(report.group_facts,
            [&](const Transcript& t) {
              return group_disclosure(observations(t, x, locals), t.variant,
                                      locals, *options.category_attr,
                                      options.flag_threshold);
            },
            "group");
    }
  } else {
    const PartyId y = report.parties.back();
    check(report.collusion_facts,
          [&](const Transcript& t) {
            return derive_collusion_facts(observations(t, x, locals),
                                          observations(t, y, locals), locals);
          },
          "collusion");
  }
  return out;
}

}  // namespace linksim
