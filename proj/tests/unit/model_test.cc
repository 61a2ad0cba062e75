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

#include <sstream>

#include "linksim/errors.h"
#include "linksim/model/csv.h"
#include "linksim/model/database_io.h"
#include "linksim/model/derive.h"
#include "linksim/model/schema.h"
#include "linksim/model/synthetic.h"
#include "support/test_util.h"

namespace linksim {
namespace {

using testing::data_path;
using testing::TempDir;

Schema health_schema() { return load_schema(data_path("health_schema.yaml")); }

TEST(Schema, RejectsWeightsNotSummingToOne) {
  EXPECT_THROW(Schema({{"a", 0.5}, {"b", 0.4}}, {}), ContractError);
}

TEST(Schema, RejectsDuplicateAndReservedNames) {
  EXPECT_THROW(Schema({{"a", 0.5}, {"a", 0.5}}, {}), ContractError);
  EXPECT_THROW(Schema({{"id", 1.0}}, {}), ContractError);
  EXPECT_THROW(Schema({{"a", 1.0}}, {"a"}), ContractError);
}

TEST(Schema, DerivedColumnsFollowBaseColumns) {
  const Schema s = health_schema();
  EXPECT_EQ(s.qid_names(),
            (std::vector<std::string>{"FirstN", "LastN", "City", "DoB"}));
  EXPECT_EQ(s.pd_columns(),
            (std::vector<std::string>{"BP", "HbA1c", "Creat", "Age"}));
  EXPECT_EQ(s.pd_index("Age"), 3u);
}

TEST(Schema, YamlRoundTrip) {
  const Schema s = health_schema();
  EXPECT_EQ(parse_schema(schema_to_yaml(s)), s);
  EXPECT_EQ(parse_schema(schema_to_yaml(synthetic_schema())), synthetic_schema());
}

TEST(Database, HealthExampleFile) {
  const Schema s = load_schema(data_path("education_schema.yaml"));
  const Database health = load_database(data_path("health.csv"),
                                        Schema(s.qid_attrs(), {"BP", "HbA1c", "Creat"}));
  EXPECT_EQ(health.size(), 3u);
  EXPECT_EQ(health.schema().qid_arity(), 4u);
  EXPECT_EQ(health.schema().pd_arity(), 3u);
  const Record* a1 = health.find(RecordId("A1"));
  ASSERT_NE(a1, nullptr);
  EXPECT_EQ(a1->qid, (std::vector<std::string>{"John", "Eliott", "London", "23/07/79"}));
  EXPECT_EQ(a1->pd, (std::vector<std::string>{"21.9", "3.7", "0.9"}));
}

TEST(Database, DerivedAgeIsComputedOnLoad) {
  const Database health = load_database(data_path("health.csv"), health_schema());
  EXPECT_EQ(health.find(RecordId("A1"))->pd.back(), "46");
  EXPECT_EQ(health.name(), "health");
}

TEST(Database, HeaderOnlyFileIsEmpty) {
  std::istringstream in("id,FirstN,LastN,City,DoB,BP,HbA1c,Creat\n");
  EXPECT_EQ(read_database(in, health_schema(), "h").size(), 0u);
}

TEST(Database, DuplicateIdNamesTheId) {
  std::istringstream in(
      "id,FirstN,LastN,City,DoB,BP,HbA1c,Creat\n"
      "A1,John,Eliott,London,23/07/79,21.9,3.7,0.9\n"
      "A1,Mary,Smith,Leeds,02/11/85,19.4,5.1,1.2\n");
  try {
    read_database(in, health_schema(), "h");
    FAIL() << "expected IntegrityError";
  } catch (const IntegrityError& e) {
    EXPECT_NE(std::string(e.what()).find("\"A1\""), std::string::npos);
  }
}

TEST(Database, MissingColumnAndRaggedRowAreParseErrors) {
  std::istringstream missing("id,FirstN,LastN,City,BP,HbA1c,Creat\n");
  EXPECT_THROW(read_database(missing, health_schema(), "h"), ParseError);
  std::istringstream ragged(
      "id,FirstN,LastN,City,DoB,BP,HbA1c,Creat\nA1,John\n");
  try {
    read_database(ragged, health_schema(), "h");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Database, WriteThenLoadRoundTrips) {
  TempDir dir;
  const Database health = load_database(data_path("health.csv"), health_schema());
  write_database(health, dir / "h.csv");
  EXPECT_EQ(load_database(dir / "h.csv", health_schema(), "health"), health);
}

TEST(Csv, QuotedFieldsRoundTrip) {
  std::ostringstream out;
  csv::write_row(out, {"a,b", "say \"hi\"", "line\nbreak", ""});
  std::istringstream in(out.str());
  const auto rows = csv::read(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (csv::Row{"a,b", "say \"hi\"", "line\nbreak", ""}));
}

TEST(Csv, UnterminatedQuoteIsParseError) {
  std::istringstream in("a,\"b\n");
  EXPECT_THROW(csv::read(in), ParseError);
}

TEST(GroundTruth, FileRoundTripAndOneToOne) {
  TempDir dir;
  GroundTruth t({{RecordId("A2"), RecordId("B9")}, {RecordId("A1"), RecordId("B3")}});
  EXPECT_TRUE(t.contains(RecordId("A1"), RecordId("B3")));
  write_ground_truth(t, dir / "t.csv");
  EXPECT_EQ(load_ground_truth(dir / "t.csv"), t);
  EXPECT_THROW(GroundTruth({{RecordId("A1"), RecordId("B1")},
                            {RecordId("A1"), RecordId("B2")}}),
               IntegrityError);
}

TEST(DeriveAge, Examples) {
  EXPECT_EQ(derive_age("23/07/79", 2025), "46");
  EXPECT_EQ(derive_age("01/01/25", 2025), "0");
  EXPECT_THROW(derive_age("31/02/79", 2025), DerivationError);
  EXPECT_THROW(derive_age("1979-07-23", 2025), DerivationError);
}

TEST(DeriveAge, TwoDigitYearPivot) {
  EXPECT_EQ(expand_two_digit_year(0), 2000);
  EXPECT_EQ(expand_two_digit_year(29), 2029);
  EXPECT_EQ(expand_two_digit_year(30), 1930);
  EXPECT_EQ(expand_two_digit_year(99), 1999);
}

TEST(DeriveAge, FutureBirthYearIsRejected) {
  EXPECT_THROW(derive_age("01/01/29", 2025), DerivationError);
}

TEST(Synthetic, ZeroTypoOverlapCopiesAreExact) {
  const Corpus c = gen_synthetic_corpus({100, 100, 0.5, 0.0, 7});
  EXPECT_EQ(c.truth.size(), 50u);
  for (const auto& [l, r] : c.truth.pairs()) {
    EXPECT_EQ(c.a.find(l)->qid, c.b.find(r)->qid);
  }
}

TEST(Synthetic, ZeroOverlapHasNoTruth) {
  EXPECT_EQ(gen_synthetic_corpus({100, 100, 0.0, 0.1, 7}).truth.size(), 0u);
}

TEST(Synthetic, TyposTouchSomeSharedRecord) {
  const Corpus c = gen_synthetic_corpus({50, 80, 0.4, 0.05, 3});
  EXPECT_EQ(c.a.size(), 50u);
  EXPECT_EQ(c.b.size(), 80u);
  EXPECT_EQ(c.truth.size(), 20u);
  std::size_t differing = 0;
  for (const auto& [l, r] : c.truth.pairs()) {
    if (c.a.find(l)->qid != c.b.find(r)->qid) ++differing;
  }
  EXPECT_GE(differing, 1u);
}

TEST(Synthetic, SameSeedSameCorpus) {
  const Corpus x = gen_synthetic_corpus({60, 40, 0.5, 0.1, 11});
  const Corpus y = gen_synthetic_corpus({60, 40, 0.5, 0.1, 11});
  EXPECT_EQ(x.a, y.a);
  EXPECT_EQ(x.b, y.b);
  EXPECT_EQ(x.truth, y.truth);
  const Corpus z = gen_synthetic_corpus({60, 40, 0.5, 0.1, 12});
  EXPECT_NE(x.a, z.a);
}

TEST(Synthetic, InvalidFractionsAreContractErrors) {
  EXPECT_THROW(gen_synthetic_corpus({10, 10, 1.5, 0.0, 1}), ContractError);
  EXPECT_THROW(gen_synthetic_corpus({10, 10, 0.5, -0.1, 1}), ContractError);
}

TEST(Synthetic, QidTuplesAreDistinct) {
  const Corpus c = gen_synthetic_corpus({300, 300, 0.3, 0.0, 2});
  std::set<std::vector<std::string>> seen;
  for (const auto& r : c.a.records()) EXPECT_TRUE(seen.insert(r.qid).second);
}

TEST(Corrupt, KeepsSeparatorsAndCharacterClass) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::string out = corrupt("23/07/79", 0.3, rng);
    for (char c : out) {
      EXPECT_TRUE(std::isdigit(static_cast<unsigned char>(c)) || c == '/') << out;
    }
  }
  std::mt19937_64 rng2(1);
  EXPECT_EQ(corrupt("Peter", 0.0, rng2), "Peter");
}

}  // namespace
}  // namespace linksim
