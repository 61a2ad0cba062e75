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

#ifndef LINKSIM_AUDIT_AUDITOR_H_
#define LINKSIM_AUDIT_AUDITOR_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linksim/audit/expectations.h"
#include "linksim/audit/fact.h"
#include "linksim/audit/group_disclosure.h"
#include "linksim/protocol/engine.h"
#include "linksim/protocol/transcript.h"

namespace linksim {

// fully_trusted: nothing to audit. hbc: every party on its own.
// hbc_collusion: additionally every pair of protocol parties.
enum class AuditMode { kFullyTrusted, kHbc, kHbcCollusion };

std::string_view to_string(AuditMode mode);
AuditMode parse_audit_mode(std::string_view text);

enum class VerdictStatus { kAsExpected, kDeviates, kUnchecked };
std::string_view to_string(VerdictStatus status);

struct Verdict {
  VerdictStatus status = VerdictStatus::kUnchecked;
  FactKindSet extra;
  FactKindSet missing;

  bool operator==(const Verdict&) const = default;
};

struct LeakageReport {
  ProtocolVariant variant;
  bool merged_lu_dm = false;
  std::vector<PartyId> parties;  // one, or two for a collusion report
  // What the listed parties learn from their own holdings (the union of
  // both for a pair).
  std::vector<Fact> facts;
  // What only the combination yields: a pair's cross-joins, or the merged
  // party's linkage-plus-merge joins.
  std::vector<Fact> collusion_facts;
  std::vector<Fact> group_facts;
  Verdict verdict;
  // Illegal messages in the inbox, basis problems, skipped analyses.
  std::vector<std::string> annotations;

  // "sep-tdl.DO_A" or "sep-tdl.DO_A+LU"; used as the report file stem.
  std::string name() const;
  bool operator==(const LeakageReport&) const = default;
};

nlohmann::ordered_json report_to_json(const LeakageReport& report);
LeakageReport report_from_json(const nlohmann::ordered_json& j);

struct AuditOptions {
  AuditMode mode = AuditMode::kHbc;
  ExpectationMatrix matrix = ExpectationMatrix::defaults();
  CollusionExpectations collusion = CollusionExpectations::defaults();
  // Group disclosure runs for the data merger of no-backflow runs when set.
  std::optional<std::string> category_attr;
  double flag_threshold = kDefaultGroupFlagThreshold;
  // Re-derive each fact without its basis messages and annotate any fact
  // that survives.
  bool check_basis = true;
};

// IntegrityError unless the transcript is the one the run metadata was
// written for (same variant, shape and digest).
void check_integrity(const Transcript& transcript, const RunLocals& locals);

LeakageReport audit_single(const Transcript& transcript, PartyId party,
                           const RunLocals& locals,
                           const AuditOptions& options = {});

// ContractError when x == y.
LeakageReport audit_collusion(const Transcript& transcript, PartyId x,
                              PartyId y, const RunLocals& locals,
                              const AuditOptions& options = {});

// Reports in a fixed order: every participant, then (for hbc_collusion)
// every pair. Empty for fully_trusted.
std::vector<LeakageReport> audit_run(const Transcript& transcript,
                                     const RunLocals& locals,
                                     const AuditOptions& options = {});

// Descriptions of the facts in `report` that can still be derived once
// their basis messages are removed from the transcript.
std::vector<std::string> basis_violations(const Transcript& transcript,
                                          const RunLocals& locals,
                                          const LeakageReport& report,
                                          const AuditOptions& options = {});

}  // namespace linksim

#endif  // LINKSIM_AUDIT_AUDITOR_H_
