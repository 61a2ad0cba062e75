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
#include <sstream>

#include "linksim/encode/hex.h"
#include "linksim/errors.h"
#include "linksim/model/database_io.h"
#include "linksim/model/synthetic.h"
#include "linksim/protocol/anonymizer.h"
#include "linksim/protocol/engine.h"
#include "linksim/protocol/operations.h"
#include "linksim/protocol/steps.h"
#include "support/test_util.h"

namespace linksim {
namespace {

using testing::data_path;

const SecretKey kKey = SecretKey::derive_from_seed(42);

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

Database one(const std::string& name, const std::string& id,
             std::vector<std::string> pd) {
  return Database(name, qid_only({"X"}),
                  {{RecordId(id), {"John", "Eliott", "London", "23/07/79"}, std::move(pd)}});
}

EncodingContext enc() { return {EncodingParams{}, kKey}; }

RunParams tdl_params() { return RunParams{}; }

RunParams pprl_params() {
  RunParams p;
  p.encoding = EncodingParams{};
  p.key = kKey;
  return p;
}

RunParams params_for(ProtocolVariant v) {
  return v.mode == Mode::kPprl ? pprl_params() : tdl_params();
}

// ---------------------------------------------------------------- parties

TEST(Party, NamesRoundTrip) {
  for (PartyId p : {PartyId::kDoA, PartyId::kDoB, PartyId::kLu, PartyId::kDm,
                    PartyId::kOut, PartyId::kLuDm}) {
    EXPECT_EQ(parse_party(to_string(p)), p);
  }
  EXPECT_THROW(parse_party("DA"), ParseError);
}

TEST(Party, VariantsRoundTrip) {
  ASSERT_EQ(all_variants().size(), 4u);
  for (ProtocolVariant v : all_variants()) {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_EQ(to_string(ProtocolVariant{Flow::kNoBackflow, Mode::kPprl}), "nbf-pprl");
  EXPECT_EQ(parse_flow("no_backflow"), Flow::kNoBackflow);
  EXPECT_EQ(parse_flow("separation_principle"), Flow::kSeparation);
  EXPECT_THROW(parse_variant("sep"), ConfigError);
}

// --------------------------------------------------------------- payloads

std::vector<Payload> sample_payloads() {
  BloomFilter f(64, "fp");
  f.set(3);
  Suf suf{{"BP"}, {"GPA"}, {{"Pdemo-0", {"21.9"}, {"3.4"}}}};
  return {PlainQidList{{"FirstN"}, {{"A1", {"John"}}}},
          EncodedQidList{"fp", {{"e1", f}}},
          MatchBackflow{{{"A1", "Pdemo-0"}}},
          PdWithMid{{"BP"}, {{"Pdemo-0", {"21.9"}}}},
          PdWithId{{"BP"}, {{"A1", {"21.9"}}, {"A2", {"19.4"}}}},
          MatchIdPairs{{{"A1", "123"}}},
          SufFile{suf},
          PufFile{Puf{{"A.BP", "B.GPA"}, {{"21.9", "3.4"}}}}};
}

TEST(Payload, JsonRoundTripEveryKind) {
  for (const Payload& p : sample_payloads()) {
    const auto j = payload_to_json(p);
    EXPECT_EQ(payload_from_json(kind_of(p), j), p) << j.dump();
  }
}

TEST(Payload, EntryCounts) {
  const auto ps = sample_payloads();
  EXPECT_EQ(entry_count(ps[0]), 1u);
  EXPECT_EQ(entry_count(ps[4]), 2u);
}

TEST(Payload, MalformedJsonIsParseError) {
  EXPECT_THROW(payload_from_json(PayloadKind::kMatchIdPairs,
                                 nlohmann::ordered_json::parse("{\"x\":1}")),
               ParseError);
}

TEST(Payload, SufCsvRoundTrip) {
  const Suf suf{{"BP", "Age"}, {"GPA"}, {{"Pdemo-0", {"21.9", "46"}, {"3.4"}},
                                         {"Pdemo-1", {"19.4", ""}, {"3.8"}}}};
  EXPECT_EQ(suf.header(),
            (std::vector<std::string>{"MatchId", "A.BP", "A.Age", "B.GPA"}));
  std::ostringstream out;
  write_suf_csv(suf, out);
  std::istringstream in(out.str());
  EXPECT_EQ(read_suf_csv(in), suf);
}

// --------------------------------------------------------------- messages

TEST(Message, JsonLineRoundTrip) {
  for (const Payload& p : sample_payloads()) {
    const Message m = make_message(3, 2, PartyId::kLu, PartyId::kDoA, p);
    const Message back = message_from_json_line(to_json_line(m));
    EXPECT_EQ(back.seq, 3u);
    EXPECT_EQ(back.step, 2);
    EXPECT_EQ(back.sender, PartyId::kLu);
    EXPECT_EQ(back.receiver, PartyId::kDoA);
    EXPECT_EQ(back.payload, p);
    EXPECT_EQ(to_json_line(back), to_json_line(m));
  }
}

TEST(Message, FieldOrderIsStable) {
  const Message m =
      make_message(0, 1, PartyId::kDoA, PartyId::kLu, MatchIdPairs{{{"a", "b"}}});
  EXPECT_EQ(to_json_line(m),
            "{\"seq\":0,\"step\":1,\"sender\":\"DO_A\",\"receiver\":\"LU\","
            "\"kind\":\"MatchIdPairs\",\"payload\":{\"entries\":[{\"left\":"
            "\"a\",\"right\":\"b\"}]}}");
}

TEST(Message, RejectsNonCanonicalPayload) {
  const std::string line =
      "{\"seq\":0,\"step\":1,\"sender\":\"DO_A\",\"receiver\":\"LU\","
      "\"kind\":\"MatchIdPairs\",\"payload\":{\"entries\":[{\"right\":"
      "\"b\",\"left\":\"a\"}]}}";
  EXPECT_THROW(message_from_json_line(line, 4), ParseError);
  EXPECT_THROW(message_from_json_line("{not json", 1), ParseError);
}

// ------------------------------------------------------------------ steps

TEST(Steps, TablesHaveFourSteps) {
  const auto sep = legal_steps({Flow::kSeparation, Mode::kTdl}, false);
  const auto nbf = legal_steps({Flow::kNoBackflow, Mode::kTdl}, false);
  EXPECT_EQ(sep.size(), 7u);
  EXPECT_EQ(nbf.size(), 6u);
  for (const auto& s : nbf) {
    EXPECT_FALSE(is_data_owner(s.receiver)) << "step " << s.step;
  }
}

TEST(Steps, IllegalMessagesAreNamed) {
  const ProtocolVariant nbf{Flow::kNoBackflow, Mode::kTdl};
  const Message injected = make_message(9, 3, PartyId::kLu, PartyId::kDoA,
                                        PdWithId{{"BP"}, {{"A1", {"1"}}}});
  EXPECT_TRUE(check_message(nbf, false, injected).has_value());

  BloomFilter f(64, "fp");
  const Message filter_in_tdl = make_message(
      0, 1, PartyId::kDoA, PartyId::kLu, EncodedQidList{"fp", {{"e", f}}});
  EXPECT_TRUE(check_message(nbf, false, filter_in_tdl).has_value());

  const Message plain_in_pprl = make_message(
      0, 1, PartyId::kDoA, PartyId::kLu, PlainQidList{{"FirstN"}, {{"A1", {"x"}}}});
  EXPECT_TRUE(check_message({Flow::kNoBackflow, Mode::kPprl}, false, plain_in_pprl)
                  .has_value());
  const Message ok = make_message(0, 1, PartyId::kDoA, PartyId::kLu,
                                  PlainQidList{{"FirstN"}, {{"A1", {"x"}}}});
  EXPECT_FALSE(check_message(nbf, false, ok).has_value());
}

// ------------------------------------------------------------- operations

TEST(Operations, Step1Projection) {
  const Database h = health();
  const Payload tdl = do_prepare_step1(h, Mode::kTdl, nullptr);
  const auto& plain = std::get<PlainQidList>(tdl);
  ASSERT_EQ(plain.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(plain.entries[i].first, h.records()[i].id.value());
    EXPECT_EQ(plain.entries[i].second, h.records()[i].qid);
  }
  const auto e = enc();
  const Payload pprl = do_prepare_step1(h, Mode::kPprl, &e);
  const std::string bytes = payload_to_json(pprl).dump();
  EXPECT_EQ(entry_count(pprl), 3u);
  for (const auto& r : h.records()) {
    EXPECT_EQ(bytes.find("\"" + r.id.value() + "\""), std::string::npos);
  }
  EXPECT_EQ(bytes.find("21.9"), std::string::npos);
  EXPECT_THROW(do_prepare_step1(h, Mode::kPprl, nullptr), ContractError);
}

TEST(Operations, LinkIdenticalAndEmpty) {
  const Database a = one("a", "A1", {"1"});
  const Database b = one("b", "B1", {"2"});
  LinkConfig cfg;
  cfg.schema = a.schema();
  const auto pa = do_prepare_step1(a, Mode::kTdl, nullptr);
  const auto pb = do_prepare_step1(b, Mode::kTdl, nullptr);
  EXPECT_EQ(lu_link(pa, pb, Mode::kTdl, cfg).size(), 1u);
  const Database empty("e", a.schema(), {});
  EXPECT_TRUE(lu_link(do_prepare_step1(empty, Mode::kTdl, nullptr), pb, Mode::kTdl, cfg)
                  .empty());
  const auto e = enc();
  EXPECT_EQ(lu_link(do_prepare_step1(a, Mode::kPprl, &e),
                    do_prepare_step1(b, Mode::kPprl, &e), Mode::kPprl, {})
                .size(),
            1u);
  EXPECT_THROW(lu_link(pa, pb, Mode::kPprl, {}), ContractError);
}

TEST(Operations, ZeroTypoLinkageEqualsTruth) {
  const Corpus c = gen_synthetic_corpus({80, 80, 0.5, 0.0, 5});
  LinkConfig cfg;
  cfg.threshold = 1.0;
  cfg.schema = c.a.schema();
  const MatchSet m = lu_link(do_prepare_step1(c.a, Mode::kTdl, nullptr),
                             do_prepare_step1(c.b, Mode::kTdl, nullptr),
                             Mode::kTdl, cfg);
  ASSERT_EQ(m.size(), c.truth.size());
  for (const auto& p : m.pairs()) {
    EXPECT_TRUE(c.truth.contains(RecordId(p.left), RecordId(p.right)));
  }
}

MatchSet two_matches() {
  return MatchSet({{"A1", "123", SimilarityScore(0.9)},
                   {"A3", "242", SimilarityScore(0.85)}});
}

TEST(Operations, BackflowSeparatesSides) {
  const auto ids = assign_match_ids(two_matches(), "demo");
  const auto [to_a, to_b] = lu_backflow(ids, Flow::kSeparation);
  ASSERT_EQ(to_a.entries.size(), 2u);
  ASSERT_EQ(to_b.entries.size(), 2u);
  std::multiset<std::string> ma, mb;
  for (const auto& [id, mid] : to_a.entries) {
    ma.insert(mid);
    EXPECT_NE(id, "123");
    EXPECT_NE(id, "242");
  }
  for (const auto& e : to_b.entries) mb.insert(e.second);
  EXPECT_EQ(ma, mb);
  EXPECT_THROW(lu_backflow(ids, Flow::kNoBackflow), ContractError);
}

TEST(Operations, AttachPdHealthExample) {
  const Database h = health();
  EXPECT_TRUE(do_attach_pd(h, MatchBackflow{}, Mode::kTdl, nullptr).entries.empty());
  const PdWithMid pd =
      do_attach_pd(h, MatchBackflow{{{"A1", "Pdemo-0"}}}, Mode::kTdl, nullptr);
  ASSERT_EQ(pd.entries.size(), 1u);
  EXPECT_EQ(pd.entries[0].first, "Pdemo-0");
  EXPECT_EQ(pd.entries[0].second, (std::vector<std::string>{"21.9", "3.7", "0.9"}));
  const std::string bytes = payload_to_json(pd).dump();
  EXPECT_EQ(bytes.find("John"), std::string::npos);
  EXPECT_EQ(bytes.find("\"A1\""), std::string::npos);
  EXPECT_THROW(do_attach_pd(h, MatchBackflow{{{"A9", "Pdemo-0"}}}, Mode::kTdl, nullptr),
               IntegrityError);
}

TEST(Operations, AttachPdMapsEncodedIds) {
  const Database h = health();
  const auto e = enc();
  const std::string eid = encode_record_id(RecordId("A2"), kKey).value();
  const PdWithMid pd =
      do_attach_pd(h, MatchBackflow{{{eid, "Pdemo-3"}}}, Mode::kPprl, &e);
  ASSERT_EQ(pd.entries.size(), 1u);
  EXPECT_EQ(pd.entries[0].second[0], "19.4");
}

TEST(Operations, SendAllPd) {
  const Database h = health();
  const PdWithId tdl = do_send_all_pd(h, Mode::kTdl, nullptr);
  EXPECT_EQ(tdl.entries.size(), 3u);
  EXPECT_EQ(payload_to_json(tdl).dump().find("Eliott"), std::string::npos);
  const auto e = enc();
  const PdWithId pprl = do_send_all_pd(h, Mode::kPprl, &e);
  const Payload prepared = do_prepare_step1(h, Mode::kPprl, &e);
  const auto& step1 = std::get<EncodedQidList>(prepared);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(pprl.entries[i].first, step1.entries[i].first);
  }
}

TEST(Operations, MergeSeparation) {
  EXPECT_TRUE(dm_merge_sep({}, {}).rows.empty());
  const PdWithMid a{{"BP"}, {{"Pdemo-0", {"21.9"}}}};
  const PdWithMid b{{"GPA"}, {{"Pdemo-0", {"3.4"}}}};
  const Suf suf = dm_merge_sep(a, b);
  ASSERT_EQ(suf.rows.size(), 1u);
  EXPECT_EQ(suf.rows[0], (SufRow{"Pdemo-0", {"21.9"}, {"3.4"}}));
  const PdWithMid other{{"GPA"}, {{"Pdemo-7", {"3.4"}}}};
  try {
    dm_merge_sep(a, other);
    FAIL();
  } catch (const IntegrityError& e) {
    EXPECT_NE(std::string(e.what()).find("Pdemo-"), std::string::npos);
  }
}

TEST(Operations, MergeNoBackflow) {
  const PdWithId a{{"BP"}, {{"A1", {"21.9"}}, {"A2", {"19.4"}}}};
  const PdWithId b{{"GPA"}, {{"123", {"3.4"}}, {"657", {"3.8"}}}};
  EXPECT_TRUE(dm_merge_nbf(MatchIdPairs{}, a, b, "demo").rows.empty());
  const Suf suf = dm_merge_nbf(MatchIdPairs{{{"A1", "123"}}}, a, b, "demo");
  ASSERT_EQ(suf.rows.size(), 1u);
  EXPECT_EQ(suf.rows[0], (SufRow{"Pdemo-0", {"21.9"}, {"3.4"}}));
  EXPECT_THROW(dm_merge_nbf(MatchIdPairs{{{"A9", "123"}}}, a, b, "demo"),
               IntegrityError);
}

// ------------------------------------------------------------- anonymiser

Suf small_suf() {
  return Suf{{"BP", "Age"}, {"GPA"},
             {{"P-0", {"21.9", "46"}, {"3.4"}},
              {"P-1", {"19.4", "40"}, {"3.8"}},
              {"P-2", {"23.0", "33"}, {"3.9"}}}};
}

TEST(Anonymizer, IdentityDropsMatchId) {
  const Puf puf = da_anonymize(small_suf(), {});
  EXPECT_EQ(puf.columns, (std::vector<std::string>{"A.BP", "A.Age", "B.GPA"}));
  ASSERT_EQ(puf.rows.size(), 3u);
  EXPECT_EQ(puf.rows[0], (std::vector<std::string>{"21.9", "46", "3.4"}));
}

TEST(Anonymizer, SuppressionAndRounding) {
  EXPECT_TRUE(da_anonymize(small_suf(), {2, {}}).rows.empty());
  const Puf rounded =
      da_anonymize(small_suf(), {1, {{"A.BP", SdcRule::Op::kRound, 5}}});
  EXPECT_EQ(rounded.rows[0][0], "20");
  // Dropping the distinct columns and top-coding the rest leaves one class.
  const Puf grouped = da_anonymize(
      small_suf(), {3,
                    {{"A.BP", SdcRule::Op::kDrop, 0},
                     {"B.GPA", SdcRule::Op::kDrop, 0},
                     {"A.Age", SdcRule::Op::kTopCode, 30}}});
  EXPECT_EQ(grouped.columns, (std::vector<std::string>{"A.Age"}));
  EXPECT_EQ(grouped.rows.size(), 3u);
  EXPECT_THROW(da_anonymize(small_suf(), {1, {{"A.Nope", SdcRule::Op::kDrop, 0}}}),
               ConfigError);
}

// ----------------------------------------------------------------- engine

TEST(Engine, SeparationTraceOnIdenticalSingletons) {
  const RunResult r = run_protocol({Flow::kSeparation, Mode::kTdl},
                                   one("a", "A1", {"1"}), one("b", "B1", {"2"}),
                                   tdl_params());
  const std::vector<std::tuple<int, PartyId, PartyId>> expected{
      {1, PartyId::kDoA, PartyId::kLu}, {1, PartyId::kDoB, PartyId::kLu},
      {2, PartyId::kLu, PartyId::kDoA}, {2, PartyId::kLu, PartyId::kDoB},
      {3, PartyId::kDoA, PartyId::kDm}, {3, PartyId::kDoB, PartyId::kDm},
      {4, PartyId::kDm, PartyId::kOut}};
  ASSERT_EQ(r.transcript.messages.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Message& m = r.transcript.messages[i];
    EXPECT_EQ(m.seq, i + 1);
    EXPECT_EQ(std::make_tuple(m.step, m.sender, m.receiver), expected[i]) << i;
  }
  EXPECT_EQ(r.suf.rows.size(), 1u);
  EXPECT_EQ(r.suf.rows[0].pd_left, (std::vector<std::string>{"1"}));
}

TEST(Engine, NoBackflowNeverReachesOwners) {
  for (Mode mode : {Mode::kTdl, Mode::kPprl}) {
    const ProtocolVariant v{Flow::kNoBackflow, mode};
    const RunResult r = run_protocol(v, health(), education(), params_for(v));
    EXPECT_EQ(r.transcript.messages.size(), 6u);
    for (const auto& m : r.transcript.messages) {
      EXPECT_FALSE(is_data_owner(m.receiver));
    }
  }
}

TEST(Engine, HealthExampleLinksA1To123) {
  RunParams p = tdl_params();
  p.threshold = 0.75;
  const RunResult r =
      run_protocol({Flow::kSeparation, Mode::kTdl}, health(), education(), p);
  ASSERT_EQ(r.lu_matches.size(), 1u);
  EXPECT_EQ(r.lu_matches.pairs()[0].left, "A1");
  EXPECT_EQ(r.lu_matches.pairs()[0].right, "123");
  ASSERT_EQ(r.suf.rows.size(), 1u);
  EXPECT_EQ(r.suf.rows[0].pd_left, (std::vector<std::string>{"21.9", "3.7", "0.9"}));
  EXPECT_EQ(r.suf.rows[0].pd_right, (std::vector<std::string>{"BSc", "3.4"}));
  EXPECT_EQ(r.suf.header(), (std::vector<std::string>{"MatchId", "A.BP", "A.HbA1c",
                                                      "A.Creat", "B.Degree", "B.GPA"}));
}

TEST(Engine, SentinelNeverLeavesOwnersInPprl) {
  const Schema s = qid_only({"X"});
  const Database a("a", s, {{RecordId("A-77"), {"ZQXJWV", "Smith", "Leeds", "01/02/03"}, {"1"}}});
  const Database b("b", s, {{RecordId("B-88"), {"ZQXJWV", "Smith", "Leeds", "01/02/03"}, {"2"}}});
  for (Flow flow : {Flow::kSeparation, Flow::kNoBackflow}) {
    const RunResult r = run_protocol({flow, Mode::kPprl}, a, b, pprl_params());
    const std::string text = r.transcript.to_jsonl();
    EXPECT_EQ(text.find("ZQXJWV"), std::string::npos);
    EXPECT_EQ(text.find("A-77"), std::string::npos);
    EXPECT_EQ(text.find("B-88"), std::string::npos);
    EXPECT_EQ(r.suf.rows.size(), 1u);
  }
}

TEST(Engine, MergedLinkageMerger) {
  RunParams p = tdl_params();
  p.merge_lu_dm = true;
  const RunResult r = run_protocol({Flow::kNoBackflow, Mode::kTdl},
                                   one("a", "A1", {"1"}), one("b", "B1", {"2"}), p);
  EXPECT_TRUE(r.transcript.merged_lu_dm);
  for (const auto& m : r.transcript.messages) {
    EXPECT_NE(m.receiver, PartyId::kLu);
    EXPECT_NE(m.receiver, PartyId::kDm);
  }
  EXPECT_EQ(r.suf.rows.size(), 1u);
}

TEST(Engine, ConfigurationErrorsComeFirst) {
  const Database a = one("a", "A1", {"1"});
  const Database b = one("b", "B1", {"2"});
  EXPECT_THROW(run_protocol({Flow::kSeparation, Mode::kPprl}, a, b, tdl_params()),
               ConfigError);
  EXPECT_THROW(run_protocol({Flow::kSeparation, Mode::kTdl}, a, b, pprl_params()),
               ConfigError);
  RunParams merged = pprl_params();
  merged.merge_lu_dm = true;
  EXPECT_THROW(run_protocol({Flow::kSeparation, Mode::kPprl}, a, b, merged),
               ConfigError);
  RunParams bad = tdl_params();
  bad.threshold = 1.5;
  EXPECT_THROW(run_protocol({Flow::kSeparation, Mode::kTdl}, a, b, bad), ConfigError);
  const Database other("o", Schema({{"Name", 1.0}}, {}), {});
  EXPECT_THROW(run_protocol({Flow::kSeparation, Mode::kTdl}, a, other, tdl_params()),
               ConfigError);
}

TEST(Engine, RunsAreDeterministic) {
  const Corpus c = gen_synthetic_corpus({60, 60, 0.5, 0.05, 9});
  for (ProtocolVariant v : all_variants()) {
    const RunResult x = run_protocol(v, c.a, c.b, params_for(v));
    const RunResult y = run_protocol(v, c.a, c.b, params_for(v));
    EXPECT_EQ(x.transcript.to_jsonl(), y.transcript.to_jsonl()) << to_string(v);
    EXPECT_EQ(x.locals, y.locals);
  }
}

TEST(Engine, LocalsRoundTripAndDigest) {
  const RunResult r = run_protocol({Flow::kNoBackflow, Mode::kPprl}, health(),
                                   education(), pprl_params());
  EXPECT_EQ(locals_from_json(locals_to_json(r.locals)), r.locals);
  EXPECT_EQ(r.locals.transcript_digest, r.transcript.digest());
  EXPECT_EQ(r.locals.owner(PartyId::kDoA)->record_ids.size(), 3u);
  EXPECT_EQ(r.locals.owner(PartyId::kDoA)->encoded_ids.size(), 3u);
  EXPECT_EQ(r.locals.owner(PartyId::kLu), nullptr);
  const std::string locals = locals_to_json(r.locals).dump();
  EXPECT_EQ(locals.find(to_hex(kKey.bytes())), std::string::npos);
}

TEST(Engine, FingerprintTracksParameters) {
  const Database a = one("a", "A1", {"1"});
  const Database b = one("b", "B1", {"2"});
  const ProtocolVariant v{Flow::kSeparation, Mode::kTdl};
  RunParams p = tdl_params();
  const std::string base = config_fingerprint(v, a, b, p);
  EXPECT_EQ(base, config_fingerprint(v, a, b, p));
  p.threshold = 0.9;
  EXPECT_NE(base, config_fingerprint(v, a, b, p));
  EXPECT_NE(base, config_fingerprint(v, a, one("b", "B2", {"2"}), tdl_params()));
}

TEST(Transcript, JsonlParsesBackAndTamperingChangesDigest) {
  const RunResult r = run_protocol({Flow::kSeparation, Mode::kTdl}, health(),
                                   education(), tdl_params());
  const std::string text = r.transcript.to_jsonl();
  Transcript back = r.transcript;
  back.messages = parse_jsonl(text);
  EXPECT_EQ(back.to_jsonl(), text);
  EXPECT_EQ(back.digest(), r.transcript.digest());
  back.messages.pop_back();
  EXPECT_NE(back.digest(), r.transcript.digest());
  EXPECT_EQ(r.transcript.inbox(PartyId::kLu).size(), 2u);
  EXPECT_EQ(r.transcript.outbox(PartyId::kLu).size(), 2u);
}

}  // namespace
}  // namespace linksim
