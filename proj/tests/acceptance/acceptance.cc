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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linksim/audit/auditor.h"
#include "linksim/audit/expectations.h"
#include "linksim/audit/group_disclosure.h"
#include "linksim/audit/matrix.h"
#include "linksim/audit/observations.h"
#include "linksim/encode/hex.h"
#include "linksim/errors.h"
#include "linksim/model/synthetic.h"
#include "linksim/protocol/engine.h"
#include "support/planted.h"

namespace linksim {
namespace {

const ProtocolVariant kSepTdl{Flow::kSeparation, Mode::kTdl};
const ProtocolVariant kSepPprl{Flow::kSeparation, Mode::kPprl};
const ProtocolVariant kNbfTdl{Flow::kNoBackflow, Mode::kTdl};
const ProtocolVariant kNbfPprl{Flow::kNoBackflow, Mode::kPprl};

constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::uint64_t kKeySeed = 7;

std::string data_file(const std::string& name) {
  return std::string(LINKSIM_TEST_DATA) + "/" + name;
}

RunParams params_for(ProtocolVariant v, double threshold) {
  RunParams p;
  p.threshold = threshold;
  p.project = "accept";
  if (v.mode == Mode::kPprl) {
    p.encoding = EncodingParams{};
    p.key = SecretKey::derive_from_seed(kKeySeed);
  }
  return p;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Transcripts and reports produced along the way, compared across two
// passes for the determinism criterion.
using Artifacts = std::vector<std::string>;

void keep(Artifacts& art, const RunResult& r) { art.push_back(r.transcript.to_jsonl()); }

void keep(Artifacts& art, const std::vector<LeakageReport>& reports) {
  for (const auto& rep : reports) art.push_back(report_to_json(rep).dump());
}

// Maps a match set to record-id pairs. PPRL matches carry encoded ids.
std::set<std::pair<std::string, std::string>> record_pairs(const RunResult& r) {
  std::map<std::string, std::string> plain;
  for (PartyId owner : {PartyId::kDoA, PartyId::kDoB}) {
    const PartyLocal* local = r.locals.owner(owner);
    for (std::size_t i = 0; i < local->encoded_ids.size(); ++i) {
      plain[local->encoded_ids[i]] = local->record_ids[i];
    }
  }
  auto resolve = [&](const std::string& id) {
    const auto it = plain.find(id);
    return it == plain.end() ? id : it->second;
  };
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : r.lu_matches.pairs()) out.emplace(resolve(p.left), resolve(p.right));
  return out;
}

std::pair<double, double> precision_recall(
    const std::set<std::pair<std::string, std::string>>& found, const GroundTruth& truth) {
  std::size_t tp = 0;
  for (const auto& [l, r] : found) tp += truth.contains(RecordId(l), RecordId(r)) ? 1 : 0;
  const double precision = found.empty() ? 1.0 : static_cast<double>(tp) / found.size();
  const double recall = truth.size() == 0 ? 1.0 : static_cast<double>(tp) / truth.size();
  return {precision, recall};
}

const Corpus& standard_corpus() {
  static const Corpus c = gen_synthetic_corpus({200, 200, 0.5, 0.05, kCorpusSeed});
  return c;
}

Outcome leakage_matrix(Artifacts& art) {
  const auto start = std::chrono::steady_clock::now();
  const Corpus& c = standard_corpus();
  std::vector<LeakageReport> reports;
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = run_protocol(v, c.a, c.b, params_for(v, 0.8));
    keep(art, r);
    auto reps = audit_run(r.transcript, r.locals);
    keep(art, reps);
    reports.insert(reports.end(), reps.begin(), reps.end());
  }
  const auto summary =
      verify_matrix(reports, ExpectationMatrix::load(data_file("leakage_matrix.json")));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  art.push_back(summary.to_text());
  return {summary.as_expected() == 12 && summary.cells.size() == 12 && secs < 10.0,
          fmt::format("{}/{} cells as expected in {:.2f} s", summary.as_expected(),
                      summary.cells.size(), secs)};
}

Outcome pprl_privacy(Artifacts& art) {
  const Corpus& base = standard_corpus();
  std::vector<Record> a = base.a.records();
  std::vector<Record> b = base.b.records();
  a.front().qid[0] = "ZQXJWV";
  b.front().qid[0] = "ZQXJWV";
  const Database da(base.a.name(), base.a.schema(), a);
  const Database db(base.b.name(), base.b.schema(), b);
  const SecretKey key = SecretKey::derive_from_seed(kKeySeed);
  std::string key_hex = to_hex(key.bytes());
  std::string key_upper = key_hex;
  std::transform(key_upper.begin(), key_upper.end(), key_upper.begin(), ::toupper);
  const std::string key_raw(key.bytes().begin(), key.bytes().end());
  std::size_t hits = 0;
  for (ProtocolVariant v : {kSepPprl, kNbfPprl}) {
    const RunResult r = run_protocol(v, da, db, params_for(v, 0.8));
    keep(art, r);
    const std::string text = r.transcript.to_jsonl();
    std::vector<std::string> needles{"ZQXJWV", key_hex, key_upper, key_raw};
    for (const auto& rec : a) needles.push_back(rec.id.value());
    for (const auto& rec : b) needles.push_back(rec.id.value());
    for (const auto& n : needles) hits += text.find(n) == std::string::npos ? 0 : 1;
  }
  return {hits == 0, fmt::format("{} forbidden substrings found", hits)};
}

Outcome linkage_equivalence(Artifacts& art) {
  const Corpus c = gen_synthetic_corpus({200, 200, 0.5, 0.0, kCorpusSeed + 1});
  const RunResult tdl = run_protocol(kSepTdl, c.a, c.b, params_for(kSepTdl, 1.0));
  const RunResult pprl = run_protocol(kSepPprl, c.a, c.b, params_for(kSepPprl, 1.0));
  keep(art, tdl);
  keep(art, pprl);
  const auto t = record_pairs(tdl);
  const auto p = record_pairs(pprl);
  const auto [tp, tr] = precision_recall(t, c.truth);
  const auto [pp, pr] = precision_recall(p, c.truth);
  return {tp == 1.0 && tr == 1.0 && pp == 1.0 && pr == 1.0 && t == p,
          fmt::format("plain P={} R={}, pprl P={} R={}, same pairs: {}", tp, tr, pp, pr,
                      t == p)};
}

Outcome pprl_quality(Artifacts& art) {
  const Corpus& c = standard_corpus();
  const RunResult r = run_protocol(kSepPprl, c.a, c.b, params_for(kSepPprl, 0.8));
  keep(art, r);
  const auto [p, rec] = precision_recall(record_pairs(r), c.truth);
  return {rec >= 0.9 && p >= 0.95, fmt::format("precision {:.4f}, recall {:.4f}", p, rec)};
}

std::multiset<std::pair<std::vector<std::string>, std::vector<std::string>>> rows_of(
    const Suf& suf) {
  std::multiset<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
  for (const auto& row : suf.rows) out.emplace(row.pd_left, row.pd_right);
  return out;
}

Outcome suf_equivalence(Artifacts& art) {
  const Corpus& c = standard_corpus();
  bool all = true;
  std::string detail;
  for (Mode mode : {Mode::kTdl, Mode::kPprl}) {
    const ProtocolVariant sep{Flow::kSeparation, mode};
    const ProtocolVariant nbf{Flow::kNoBackflow, mode};
    const RunResult s = run_protocol(sep, c.a, c.b, params_for(sep, 0.8));
    const RunResult n = run_protocol(nbf, c.a, c.b, params_for(nbf, 0.8));
    keep(art, s);
    keep(art, n);
    const bool same = rows_of(s.suf) == rows_of(n.suf) && s.suf.header() == n.suf.header();
    all = all && same;
    detail += fmt::format("{}{}: {} rows, {}", detail.empty() ? "" : "; ", to_string(mode),
                          s.suf.rows.size(), same ? "equal" : "differ");
  }
  return {all, detail};
}

Outcome group_disclosure_planted(Artifacts& art) {
  // 1000 records in A: 20 bartenders with 5 matched (0.25), the other nine
  // occupations share 980 records and 15 matches, so overall is 0.02.
  std::vector<testing::PlantedGroup> groups{{"Bartender", 20, 5}};
  std::size_t spread = 0;
  for (const auto& occ : synthetic_occupations()) {
    if (occ == "Bartender") continue;
    groups.push_back({occ, spread < 8 ? 109u : 108u, spread < 6 ? 2u : 1u});
    ++spread;
  }
  const Corpus c = testing::planted_corpus(groups, kCorpusSeed);
  std::string detail = fmt::format("n_a={} n_b={};", c.a.size(), c.b.size());
  bool ok = c.a.size() == 1000 && c.b.size() == 20;
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = run_protocol(v, c.a, c.b, params_for(v, 1.0));
    keep(art, r);
    const auto dm = observations(r.transcript, PartyId::kDm, r.locals);
    if (v.flow == Flow::kSeparation) {
      bool refused = false;
      try {
        group_disclosure(dm, v, r.locals, "Occupation");
      } catch (const ContractError&) {
        refused = true;
      }
      ok = ok && refused;
      detail += fmt::format(" {}: {}", to_string(v), refused ? "refused" : "NOT refused");
    } else {
      const auto facts = group_disclosure(dm, v, r.locals, "Occupation");
      for (const auto& f : facts) art.push_back(fact_to_json(f).dump());
      const bool one = facts.size() == 1 && facts[0].category == "Occupation=Bartender" &&
                       facts[0].rate == 0.25 && facts[0].overall_rate == 0.02;
      ok = ok && one && r.lu_matches.size() == 20;
      detail += fmt::format(" {}: {} fact(s)", to_string(v), facts.size());
    }
  }
  return {ok, detail};
}

Outcome collusion_matrix(Artifacts& art) {
  const auto table = CollusionExpectations::load(data_file("collusion_expectations.json"));
  const Corpus& c = standard_corpus();
  std::size_t cells = 0;
  std::vector<std::string> wrong;
  for (ProtocolVariant v : all_variants()) {
    const RunResult r = run_protocol(v, c.a, c.b, params_for(v, 0.8));
    keep(art, r);
    for (const auto& [x, y] : collusion_pairs(false)) {
      const LeakageReport rep = audit_collusion(r.transcript, x, y, r.locals);
      art.push_back(report_to_json(rep).dump());
      const FactKindSet* want = table.find(v, x, y);
      ++cells;
      if (want == nullptr || kinds_of(rep.collusion_facts) != *want) {
        wrong.push_back(rep.name());
      }
    }
  }
  std::string detail = fmt::format("{}/{} pairs equal the hand-coded table", cells - wrong.size(),
                                   cells);
  for (const auto& w : wrong) detail += " " + w;
  return {wrong.empty() && cells == 24, detail};
}

using Criterion = std::function<Outcome(Artifacts&)>;

}  // namespace
}  // namespace linksim

int main() {
  using namespace linksim;
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"leakage matrix 12/12", leakage_matrix},
      {"pprl transcripts hide qids, ids and key", pprl_privacy},
      {"plain and pprl linkage agree on exact data", linkage_equivalence},
      {"pprl precision and recall", pprl_quality},
      {"sep and nbf produce the same suf", suf_equivalence},
      {"planted group disclosure", group_disclosure_planted},
      {"collusion matrix", collusion_matrix},
  };
  bool all = true;
  std::vector<Artifacts> passes(2);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      Outcome o;
      try {
        o = criteria[i].second(passes[pass]);
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
      }
      if (pass == 0) {
        std::cout << fmt::format("[{}] {}. {}: {}\n", o.pass ? "PASS" : "FAIL", i + 1,
                                 criteria[i].first, o.detail);
        all = all && o.pass;
      }
    }
  }
  const bool same = passes[0] == passes[1];
  std::cout << fmt::format("[{}] 8. deterministic artifacts: {} artifacts, {}\n",
                           same ? "PASS" : "FAIL", passes[0].size(),
                           same ? "byte-identical" : "differ");
  all = all && same;
  return all ? 0 : 1;
}
