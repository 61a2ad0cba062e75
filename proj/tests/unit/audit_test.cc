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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "linksim/audit/auditor.h"
#include "linksim/audit/expectations.h"
#include "linksim/audit/group_disclosure.h"
#include "linksim/audit/matrix.h"
#include "linksim/audit/observations.h"
#include "linksim/audit/rules.h"
#include "linksim/errors.h"
#include "linksim/model/database_io.h"
#include "linksim/model/synthetic.h"
#include "linksim/protocol/engine.h"
#include "support/planted.h"
#include "support/test_util.h"

namespace linksim {
namespace {

using testing::data_path;
using testing::planted_corpus;
using K = FactKind;

const ProtocolVariant kSepTdl{Flow::kSeparation, Mode::kTdl};
const ProtocolVariant kSepPprl{Flow::kSeparation, Mode::kPprl};
const ProtocolVariant kNbfTdl{Flow::kNoBackflow, Mode::kTdl};
const ProtocolVariant kNbfPprl{Flow::kNoBackflow, Mode::kPprl};

Schema qid_only(std::vector<std::string> pd) {
  return Schema({{"FirstN", 0.3}, {"LastN", 0.3}, {"City", 0.2}, {"DoB", 0.2}},
                std::move(pd));
}

Database health() {
  return load_database(data_path("health.csv"), qid_only({"BP", "HbA1c", "Creat"}),
                       "health");
}

Database education() {
  return load_database(data_path("education.csv"), qid_only({"Degree", "GPA"}),
                       "education");
}

RunParams params_for(ProtocolVariant v, double threshold = 0.75) {
  RunParams p;
  p.threshold = threshold;
  p.context_a = "Health";
  p.context_b = "Education";
  if (v.mode == Mode::kPprl) {
    p.encoding = EncodingParams{};
    p.key = SecretKey::derive_from_seed(11);
  }
  return p;
}

RunResult example_run(ProtocolVariant v) {
  return run_protocol(v, health(), education(), params_for(v));
}

const Corpus& corpus() {
  static const Corpus c = gen_synthetic_corpus({60, 60, 0.5, 0.05, 21});
  return c;
}

RunResult synthetic_run(ProtocolVariant v) {
  return run_protocol(v, corpus().a, corpus().b, params_for(v, 0.8));
}

std::vector<Fact> facts_of(const RunResult& r, PartyId p) {
  return derive_facts(observations(r.transcript, p, r.locals), r.locals);
}

const Fact* find_fact(const std::vector<Fact>& facts, FactKind kind,
                      const std::string& db = "") {
  for (const auto& f : facts) {
    if (f.kind == kind && (db.empty() || f.db == db)) return &f;
  }
  return nullptr;
}

// ---------------------------------------------------------- observations

TEST(Observations, FilterByReceiver) {
  const RunResult nbf = example_run(kNbfTdl);
  EXPECT_TRUE(observations(nbf.transcript, PartyId::kDoA, nbf.locals).received.empty());
  const auto lu = observations(nbf.transcript, PartyId::kLu, nbf.locals);
  ASSERT_EQ(lu.received.size(), 2u);
  EXPECT_EQ(lu.received[0].step, 1);
  EXPECT_EQ(lu.received[1].step, 1);
  EXPECT_FALSE(lu.own_data.has_value());
  EXPECT_TRUE(observations(nbf.transcript, PartyId::kDoB, nbf.locals).own_data);

  const RunResult sep = example_run(kSepTdl);
  const auto dm = observations(sep.transcript, PartyId::kDm, sep.locals);
  ASSERT_EQ(dm.received.size(), 2u);
  for (const auto& m : dm.received) {
    EXPECT_EQ(entry_count(m.payload), sep.lu_matches.size());
  }
  EXPECT_THROW(observations(sep.transcript, PartyId::kLuDm, sep.locals), ContractError);
}

// ---------------------------------------------------------------- rules

TEST(Rules, LinkageUnitInTdl) {
  const RunResult r = example_run(kSepTdl);
  const auto facts = facts_of(r, PartyId::kLu);
  EXPECT_EQ(kinds_of(facts),
            (FactKindSet{K::kSeesPlainQidOf, K::kSeesSimilarityScores, K::kSeesMatchCount}));
  const Fact* qa = find_fact(facts, K::kSeesPlainQidOf, "health");
  ASSERT_NE(qa, nullptr);
  EXPECT_EQ(qa->context, "Health");
  EXPECT_EQ(qa->subject, (std::vector<std::string>{"A1", "A2", "A3"}));
  EXPECT_EQ(qa->basis, (std::vector<std::uint64_t>{1}));
  EXPECT_NE(find_fact(facts, K::kSeesPlainQidOf, "education"), nullptr);
}

TEST(Rules, LinkageUnitInPprlSeesNoQid) {
  for (ProtocolVariant v : {kSepPprl, kNbfPprl}) {
    const auto facts = facts_of(example_run(v), PartyId::kLu);
    EXPECT_EQ(kinds_of(facts),
              (FactKindSet{K::kSeesSimilarityScores, K::kSeesMatchCount}));
  }
}

TEST(Rules, OwnerMatchStatusCoversEveryOwnRecord) {
  const RunResult r = example_run(kSepTdl);
  const auto facts = facts_of(r, PartyId::kDoA);
  ASSERT_EQ(facts.size(), 1u);
  EXPECT_EQ(facts[0].kind, K::kKnowsMatchStatusOfOwnRecord);
  EXPECT_EQ(facts[0].db, "health");
  EXPECT_EQ(facts[0].related_db, "education");
  EXPECT_EQ(facts[0].subject, (std::vector<std::string>{"A1", "A2", "A3"}));
  EXPECT_TRUE(facts_of(example_run(kNbfTdl), PartyId::kDoA).empty());
}

TEST(Rules, SeparatedMergerOnlySeesMatchedPayload) {
  for (ProtocolVariant v : {kSepTdl, kSepPprl}) {
    const auto facts = facts_of(example_run(v), PartyId::kDm);
    EXPECT_EQ(kinds_of(facts), FactKindSet{K::kSeesPdOfMatched});
    EXPECT_EQ(find_fact(facts, K::kSeesPdOfNonmatched), nullptr);
  }
  const auto nbf = facts_of(example_run(kNbfTdl), PartyId::kDm);
  EXPECT_EQ(kinds_of(nbf), (FactKindSet{K::kSeesPdOfMatched, K::kSeesPdOfNonmatched,
                                        K::kSeesMatchCount}));
}

TEST(Rules, OutputSeesMatchedPayloadOfBoth) {
  const auto facts = facts_of(example_run(kNbfTdl), PartyId::kOut);
  EXPECT_EQ(kinds_of(facts), FactKindSet{K::kSeesPdOfMatched});
  EXPECT_NE(find_fact(facts, K::kSeesPdOfMatched, "health"), nullptr);
  EXPECT_NE(find_fact(facts, K::kSeesPdOfMatched, "education"), nullptr);
}

TEST(Rules, MergeFactsUnitesBases) {
  Fact a;
  a.kind = K::kSeesMatchCount;
  a.basis = {4};
  Fact b = a;
  b.basis = {1};
  Fact c;
  c.kind = K::kSeesPlainQidOf;
  c.db = "x";
  c.subject = {"2", "1"};
  c.basis = {1};
  const auto merged = merge_facts({a, c, b});
  ASSERT_EQ(merged.size(), 2u);
  const Fact* count = find_fact(merged, K::kSeesMatchCount);
  ASSERT_NE(count, nullptr);
  EXPECT_EQ(count->basis, (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(find_fact(merged, K::kSeesPlainQidOf)->subject,
            (std::vector<std::string>{"1", "2"}));
}

TEST(Rules, FactJsonRoundTrip) {
  Fact f{K::kGroupDisclosure, "a", "A", "b", "B", {"x"}, {3, 5}, "Occupation=CEO",
         0.1, 0.6};
  EXPECT_EQ(fact_from_json(fact_to_json(f)), f);
  for (int k = 0; k <= static_cast<int>(K::kGroupDisclosure); ++k) {
    const auto kind = static_cast<FactKind>(k);
    EXPECT_EQ(parse_fact_kind(to_string(kind)), kind);
  }
}

// ------------------------------------------------------------- auditing

TEST(Auditor, CleanRunsMatchDefaults) {
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = synthetic_run(v);
    EXPECT_NO_THROW(check_integrity(r.transcript, r.locals));
    AuditOptions opts;
    opts.mode = AuditMode::kHbcCollusion;
    for (const auto& rep : audit_run(r.transcript, r.locals, opts)) {
      EXPECT_NE(rep.verdict.status, VerdictStatus::kDeviates) << rep.name();
      EXPECT_TRUE(rep.annotations.empty()) << rep.name() << ": "
                                           << rep.annotations.front();
    }
  }
}

TEST(Auditor, ReportOrderAndNames) {
  const RunResult r = synthetic_run(kSepTdl);
  AuditOptions opts;
  EXPECT_EQ(audit_run(r.transcript, r.locals, opts).size(), 5u);
  opts.mode = AuditMode::kHbcCollusion;
  const auto reps = audit_run(r.transcript, r.locals, opts);
  ASSERT_EQ(reps.size(), 11u);
  EXPECT_EQ(reps[0].name(), "sep-tdl.DO_A");
  EXPECT_EQ(reps[5].name(), "sep-tdl.DO_A+DO_B");
  EXPECT_EQ(reps.back().name(), "sep-tdl.LU+DM");
  opts.mode = AuditMode::kFullyTrusted;
  EXPECT_TRUE(audit_run(r.transcript, r.locals, opts).empty());
}

TEST(Auditor, PprlLinkageUnitAsExpected) {
  const RunResult r = synthetic_run(kSepPprl);
  const auto rep = audit_single(r.transcript, PartyId::kLu, r.locals);
  EXPECT_EQ(rep.verdict.status, VerdictStatus::kAsExpected);
  EXPECT_EQ(find_fact(rep.facts, K::kSeesPlainQidOf), nullptr);
}

Transcript inject_pd_to_owner(const RunResult& r) {
  Transcript t = r.transcript;
  const auto& step3 = t.messages.back();
  t.messages.push_back(make_message(step3.seq + 1, 3, PartyId::kLu, PartyId::kDoA,
                                    PdWithId{{"X"}, {{"someone", {"1"}}}}));
  return t;
}

TEST(Auditor, IllegalMessageDeviates) {
  const RunResult r = synthetic_run(kNbfTdl);
  const Transcript bad = inject_pd_to_owner(r);
  const auto rep = audit_single(bad, PartyId::kDoA, r.locals);
  EXPECT_EQ(rep.verdict.status, VerdictStatus::kDeviates);
  EXPECT_FALSE(rep.verdict.extra.empty());
  EXPECT_FALSE(rep.annotations.empty());
  EXPECT_THROW(check_integrity(bad, r.locals), IntegrityError);
}

TEST(Auditor, IntegrityRejectsOtherRuns) {
  const RunResult a = synthetic_run(kSepTdl);
  const RunResult b = synthetic_run(kNbfTdl);
  EXPECT_THROW(check_integrity(a.transcript, b.locals), IntegrityError);
}

TEST(Auditor, ReportJsonRoundTrip) {
  const RunResult r = synthetic_run(kNbfTdl);
  AuditOptions opts;
  opts.mode = AuditMode::kHbcCollusion;
  opts.category_attr = "Occupation";
  for (const auto& rep : audit_run(r.transcript, r.locals, opts)) {
    EXPECT_EQ(report_from_json(report_to_json(rep)), rep) << rep.name();
  }
}

TEST(Auditor, NoFactSurvivesLosingItsBasis) {
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = synthetic_run(v);
    AuditOptions opts;
    opts.mode = AuditMode::kHbcCollusion;
    opts.check_basis = false;
    for (const auto& rep : audit_run(r.transcript, r.locals, opts)) {
      EXPECT_TRUE(basis_violations(r.transcript, r.locals, rep, opts).empty())
          << rep.name();
    }
  }
}

// ------------------------------------------------------------- collusion

TEST(Collusion, OwnerWithLinkageUnit) {
  const RunResult tdl = example_run(kSepTdl);
  const auto rep = audit_collusion(tdl.transcript, PartyId::kLu, PartyId::kDoA, tdl.locals);
  EXPECT_EQ(rep.name(), "sep-tdl.DO_A+LU");
  EXPECT_EQ(kinds_of(rep.collusion_facts),
            (FactKindSet{K::kSeesPlainQidOf, K::kKnowsMatchStatusOfOwnRecord}));
  EXPECT_EQ(rep.verdict.status, VerdictStatus::kAsExpected);

  const RunResult pprl = example_run(kNbfPprl);
  const auto p = audit_collusion(pprl.transcript, PartyId::kDoA, PartyId::kLu, pprl.locals);
  EXPECT_EQ(kinds_of(p.collusion_facts), FactKindSet{K::kEncodingParamsExposed});
  EXPECT_EQ(p.collusion_facts[0].db, "education");
}

TEST(Collusion, OwnerWithMergerJoinsOtherSide) {
  const RunResult r = example_run(kSepTdl);
  const auto rep = audit_collusion(r.transcript, PartyId::kDoA, PartyId::kDm, r.locals);
  ASSERT_EQ(rep.collusion_facts.size(), 1u);
  const Fact& f = rep.collusion_facts[0];
  EXPECT_EQ(f.kind, K::kCanJoinQidToPd);
  EXPECT_EQ(f.db, "education");
  EXPECT_EQ(f.related_db, "health");
  EXPECT_EQ(f.subject, (std::vector<std::string>{"A1"}));
}

TEST(Collusion, LinkageUnitWithMerger) {
  const RunResult nbf = example_run(kNbfTdl);
  const auto rep = audit_collusion(nbf.transcript, PartyId::kLu, PartyId::kDm, nbf.locals);
  EXPECT_EQ(kinds_of(rep.collusion_facts),
            (FactKindSet{K::kCanJoinQidToPd, K::kCanReconstructFullDatabases}));
  const RunResult pprl = example_run(kNbfPprl);
  EXPECT_TRUE(audit_collusion(pprl.transcript, PartyId::kLu, PartyId::kDm, pprl.locals)
                  .collusion_facts.empty());
  const RunResult owners = example_run(kSepTdl);
  EXPECT_TRUE(audit_collusion(owners.transcript, PartyId::kDoA, PartyId::kDoB,
                              owners.locals)
                  .collusion_facts.empty());
}

TEST(Collusion, IdenticalPartiesAreRejected) {
  const RunResult r = example_run(kSepTdl);
  EXPECT_THROW(audit_collusion(r.transcript, PartyId::kLu, PartyId::kLu, r.locals),
               ContractError);
}

TEST(Collusion, MergedPartyIsJudgedOnItsJoins) {
  RunParams p = params_for(kNbfTdl);
  p.merge_lu_dm = true;
  const RunResult r = run_protocol(kNbfTdl, health(), education(), p);
  const auto rep = audit_single(r.transcript, PartyId::kLuDm, r.locals);
  EXPECT_EQ(kinds_of(rep.collusion_facts),
            (FactKindSet{K::kCanJoinQidToPd, K::kCanReconstructFullDatabases}));
  EXPECT_EQ(rep.verdict.status, VerdictStatus::kAsExpected);
  EXPECT_EQ(collusion_pairs(true).size(), 3u);
  EXPECT_EQ(collusion_pairs(false).size(), 6u);
}

TEST(Collusion, DefaultsMatchHandCodedTable) {
  // The hand-coded table lists the six pairs of the unmerged shape; the
  // defaults add the merged party's pairs on top.
  const auto d = CollusionExpectations::defaults();
  const auto table = CollusionExpectations::load(data_path("collusion_expectations.json"));
  std::size_t unmerged = 0;
  for (ProtocolVariant v : all_variants()) {
    for (const auto& [x, y] : collusion_pairs(false)) {
      const FactKindSet* want = table.find(v, x, y);
      const FactKindSet* got = d.find(v, x, y);
      ASSERT_NE(want, nullptr) << to_string(v) << " " << to_string(x) << "+" << to_string(y);
      ASSERT_NE(got, nullptr);
      EXPECT_EQ(*got, *want) << to_string(v) << " " << to_string(x) << "+" << to_string(y);
      ++unmerged;
    }
  }
  EXPECT_EQ(unmerged, 24u);
  EXPECT_EQ(table.to_json()["cells"].size(), 24u);
  EXPECT_EQ(CollusionExpectations::from_json(d.to_json()), d);
}

// -------------------------------------------------------- group disclosure

RunResult planted_run(const std::vector<testing::PlantedGroup>& groups,
                      ProtocolVariant v) {
  const Corpus c = planted_corpus(groups, 4);
  return run_protocol(v, c.a, c.b, params_for(v, 1.0));
}

std::vector<Fact> planted_facts(const std::vector<testing::PlantedGroup>& groups,
                                double threshold = kDefaultGroupFlagThreshold) {
  const RunResult r = planted_run(groups, kNbfTdl);
  return group_disclosure(observations(r.transcript, PartyId::kDm, r.locals), kNbfTdl,
                          r.locals, "Occupation", threshold);
}

TEST(GroupDisclosure, BartenderStandsOut) {
  // Overall 4/200 = 0.02; bartenders 1/4 = 0.25; the rest 3/196.
  const auto facts = planted_facts({{"Bartender", 4, 1}, {"Clerk", 196, 3}});
  ASSERT_EQ(facts.size(), 1u);
  EXPECT_EQ(facts[0].kind, K::kGroupDisclosure);
  EXPECT_EQ(facts[0].category, "Occupation=Bartender");
  EXPECT_DOUBLE_EQ(facts[0].rate, 0.25);
  EXPECT_DOUBLE_EQ(facts[0].overall_rate, 0.02);
  EXPECT_EQ(facts[0].db, "planted_a");
}

TEST(GroupDisclosure, RatesAtOverallRateAreQuiet) {
  EXPECT_TRUE(planted_facts({{"Nurse", 10, 5}, {"Clerk", 20, 10}, {"CEO", 4, 2}}).empty());
}

TEST(GroupDisclosure, RareMatchesAmongCeos) {
  // Overall 30/50 = 0.6; CEOs 1/10 = 0.1.
  const auto facts = planted_facts({{"CEO", 10, 1}, {"Nurse", 40, 29}});
  const auto it = std::find_if(facts.begin(), facts.end(), [](const Fact& f) {
    return f.category == "Occupation=CEO";
  });
  ASSERT_NE(it, facts.end());
  EXPECT_DOUBLE_EQ(it->rate, 0.1);
  EXPECT_DOUBLE_EQ(it->overall_rate, 0.6);
}

TEST(GroupDisclosure, ThresholdIsInclusive) {
  // Bartender 3/10 against 15/50: a 0.0 delta trips a zero threshold only.
  EXPECT_FALSE(planted_facts({{"Bartender", 10, 3}, {"Clerk", 40, 12}}, 0.0).empty());
  EXPECT_TRUE(planted_facts({{"Bartender", 10, 3}, {"Clerk", 40, 12}}, 0.01).empty());
}

TEST(GroupDisclosure, ContractViolations) {
  const std::vector<testing::PlantedGroup> g{{"Bartender", 4, 1}, {"Clerk", 16, 3}};
  const RunResult sep = planted_run(g, kSepTdl);
  EXPECT_THROW(group_disclosure(observations(sep.transcript, PartyId::kDm, sep.locals),
                                kSepTdl, sep.locals, "Occupation"),
               ContractError);
  const RunResult nbf = planted_run(g, kNbfTdl);
  const auto dm = observations(nbf.transcript, PartyId::kDm, nbf.locals);
  EXPECT_THROW(group_disclosure(dm, kNbfTdl, nbf.locals, "Shoe size"), ContractError);
  EXPECT_THROW(group_disclosure(dm, kNbfTdl, nbf.locals, "Occupation", -0.1),
               ContractError);
  EXPECT_THROW(group_disclosure(observations(nbf.transcript, PartyId::kLu, nbf.locals),
                                kNbfTdl, nbf.locals, "Occupation"),
               ContractError);
}

TEST(GroupDisclosure, AuditorAttachesFactsToMerger) {
  const RunResult r = planted_run({{"Bartender", 4, 1}, {"Clerk", 196, 3}}, kNbfPprl);
  AuditOptions opts;
  opts.category_attr = "Occupation";
  const auto rep = audit_single(r.transcript, PartyId::kDm, r.locals, opts);
  ASSERT_EQ(rep.group_facts.size(), 1u);
  EXPECT_EQ(rep.verdict.status, VerdictStatus::kAsExpected);
}

// ----------------------------------------------------------------- matrix

std::vector<LeakageReport> all_reports() {
  std::vector<LeakageReport> out;
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = synthetic_run(v);
    for (auto& rep : audit_run(r.transcript, r.locals)) out.push_back(std::move(rep));
  }
  return out;
}

TEST(Matrix, DefaultsMatchHandCodedTable) {
  const auto loaded = ExpectationMatrix::load(data_path("leakage_matrix.json"));
  auto d = ExpectationMatrix::defaults();
  // The output row is informational and absent from the hand-coded table.
  for (ProtocolVariant v : all_variants()) d.erase(v, Role::kOutput);
  EXPECT_EQ(d, loaded);
  EXPECT_EQ(ExpectationMatrix::from_json(loaded.to_json()), loaded);
}

TEST(Matrix, CleanRunsGiveTwelveOfTwelve) {
  const auto summary = verify_matrix(all_reports(), ExpectationMatrix::defaults());
  EXPECT_EQ(summary.cells.size(), 12u);
  EXPECT_EQ(summary.as_expected(), 12u) << summary.to_text();
  EXPECT_TRUE(summary.ok());
  EXPECT_NE(summary.to_text().find("12/12"), std::string::npos);
  EXPECT_EQ(summary.to_json()["cells"].size(), 12u);
}

TEST(Matrix, DroppedCellHasNoExpectation) {
  auto m = ExpectationMatrix::defaults();
  m.erase(kNbfTdl, Role::kDataMerger);
  const auto summary = verify_matrix(all_reports(), m);
  EXPECT_FALSE(summary.ok());
  EXPECT_EQ(summary.as_expected(), 11u);
  const auto it = std::find_if(summary.cells.begin(), summary.cells.end(),
                               [](const MatrixCell& c) { return c.status != "as_expected"; });
  ASSERT_NE(it, summary.cells.end());
  EXPECT_EQ(it->status, "no_expectation");
  EXPECT_EQ(it->role, Role::kDataMerger);
}

TEST(Matrix, RemovedKindShowsAsExtra) {
  auto m = ExpectationMatrix::defaults();
  m.set(kSepTdl, Role::kLinkageUnit, {K::kSeesSimilarityScores, K::kSeesMatchCount});
  const auto summary = verify_matrix(all_reports(), m);
  EXPECT_EQ(summary.as_expected(), 11u);
  for (const auto& c : summary.cells) {
    if (c.status == "deviates") {
      EXPECT_EQ(c.extra, FactKindSet{K::kSeesPlainQidOf});
      EXPECT_TRUE(c.missing.empty());
    }
  }
}

TEST(Matrix, IllegalMessageShowsAsExtra) {
  auto reports = all_reports();
  const RunResult r = synthetic_run(kNbfTdl);
  const Transcript bad = inject_pd_to_owner(r);
  for (auto& rep : reports) {
    if (rep.variant == kNbfTdl && rep.parties == std::vector<PartyId>{PartyId::kDoA}) {
      rep = audit_single(bad, PartyId::kDoA, r.locals);
    }
  }
  const auto summary = verify_matrix(reports, ExpectationMatrix::defaults());
  EXPECT_FALSE(summary.ok());
  EXPECT_NE(summary.to_text().find("sees_pd_of_matched"), std::string::npos);
}

TEST(Matrix, MissingReportsAreACoverageError) {
  auto reports = all_reports();
  reports.erase(std::remove_if(reports.begin(), reports.end(),
                               [](const LeakageReport& r) {
                                 return r.variant == kSepPprl &&
                                        r.parties == std::vector<PartyId>{PartyId::kDoB};
                               }),
                reports.end());
  EXPECT_THROW(verify_matrix(reports, ExpectationMatrix::defaults()), CoverageError);
  EXPECT_NO_THROW(verify_matrix(reports, ExpectationMatrix::defaults(), {kSepTdl}));
}

}  // namespace
}  // namespace linksim
