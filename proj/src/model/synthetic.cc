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

#include "linksim/model/synthetic.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "linksim/errors.h"
#include "linksim/model/derive.h"

namespace linksim {

namespace {

constexpr std::array kFirstNames = {
    "John",    "Mary",    "Peter",   "Anna",    "Michael", "Sarah",  "David",
    "Laura",   "James",   "Emma",    "Robert",  "Olivia",  "William", "Sophie",
    "Thomas",  "Grace",   "Daniel",  "Chloe",   "Matthew", "Lucy",   "Andrew",
    "Hannah",  "Joseph",  "Ella",    "Samuel",  "Amelia",  "Benjamin", "Isla",
    "Henry",   "Ruby",    "George",  "Alice",   "Edward",  "Zoe",    "Oliver",
    "Mia",     "Charles", "Jessica", "Patrick", "Megan",   "Stefan", "Ingrid",
    "Lukas",   "Greta",   "Anders",  "Freya",   "Marco",   "Giulia", "Pablo",
    "Lucia",   "Ahmed",   "Fatima",  "Kenji",   "Yuki",    "Ravi",   "Priya",
    "Tomasz",  "Agata",   "Dmitri",  "Irina"};

constexpr std::array kLastNames = {
    "Smith",    "Jones",    "Williams", "Brown",    "Taylor",   "Davies",
    "Evans",    "Wilson",   "Thomas",   "Johnson",  "Roberts",  "Robinson",
    "Thompson", "Wright",   "Walker",   "White",    "Edwards",  "Hughes",
    "Green",    "Hall",     "Lewis",    "Harris",   "Clarke",   "Patel",
    "Jackson",  "Wood",     "Turner",   "Martin",   "Cooper",   "Hill",
    "Ward",     "Morris",   "Moore",    "Clark",    "Lee",      "King",
    "Baker",    "Harrison", "Morgan",   "Allen",    "Eliott",   "Schmidt",
    "Mueller",  "Schneider", "Fischer", "Weber",    "Rossi",    "Ferrari",
    "Garcia",   "Martinez", "Nakamura", "Tanaka",   "Kowalski", "Nowak",
    "Ivanov",   "Petrov",   "Andersen", "Nielsen",  "Dubois",   "Laurent"};

constexpr std::array kCities = {
    "London",     "Manchester", "Birmingham", "Leeds",     "Glasgow",
    "Liverpool",  "Bristol",    "Sheffield",  "Edinburgh", "Cardiff",
    "Leicester",  "Coventry",   "Bradford",   "Belfast",   "Nottingham",
    "Hull",       "Newcastle",  "Plymouth",   "Derby",     "Southampton",
    "Portsmouth", "Brighton",   "Reading",    "Norwich",   "Oxford",
    "Cambridge",  "York",       "Exeter",     "Bath",      "Durham"};

using Qid = std::array<std::string, 4>;

std::string random_dob(std::mt19937_64& rng) {
  using namespace std::chrono;
  // 1935-01-01 .. 2004-12-31
  const sys_days lo{year{1935} / January / 1};
  const sys_days hi{year{2004} / December / 31};
  std::uniform_int_distribution<int> span(0, (hi - lo).count());
  const year_month_day d{lo + days{span(rng)}};
  return fmt::format("{:02}/{:02}/{:02}", static_cast<unsigned>(d.day()),
                     static_cast<unsigned>(d.month()),
                     static_cast<int>(d.year()) % 100);
}

template <typename Pool>
std::string pick(const Pool& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

std::vector<Qid> draw_entities(std::size_t n, std::mt19937_64& rng) {
  std::set<Qid> seen;
  std::vector<Qid> out;
  out.reserve(n);
  while (out.size() < n) {
    Qid q{pick(kFirstNames, rng), pick(kLastNames, rng), pick(kCities, rng),
          random_dob(rng)};
    if (seen.insert(q).second) out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::string> random_pd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> income(18000, 250000);
  std::uniform_int_distribution<int> score(10, 99);
  const int s = score(rng);
  return {pick(synthetic_occupations(), rng), std::to_string(income(rng)),
          fmt::format("{}.{}", s / 10, s % 10)};
}

char same_class_char(char like, std::mt19937_64& rng) {
  if (!std::isalnum(static_cast<unsigned char>(like))) return like;
  if (std::isdigit(static_cast<unsigned char>(like))) {
    return static_cast<char>('0' + std::uniform_int_distribution<int>(0, 9)(rng));
  }
  const char c =
      static_cast<char>('a' + std::uniform_int_distribution<int>(0, 25)(rng));
  return std::isupper(static_cast<unsigned char>(like))
             ? static_cast<char>(std::toupper(c))
             : c;
}

Record make_record(std::string id, const Qid& qid, const Schema& schema,
                   std::mt19937_64& rng) {
  Record r{RecordId(std::move(id)), {qid.begin(), qid.end()}, random_pd(rng)};
  for (const auto& rule : schema.derived()) {
    const std::string& src = r.qid[*schema.qid_index(rule.source_attr)];
    std::string age;
    try {
      age = derive_age(src, rule.reference_year);
    } catch (const DerivationError&) {
      // corrupted date of birth: keep the value missing
    }
    r.pd.push_back(std::move(age));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& synthetic_occupations() {
  static const std::vector<std::string> kOccupations = {
      "Nurse",  "Teacher", "Engineer", "Bartender", "CEO",
      "Farmer", "Clerk",   "Driver",   "Chef",      "Lawyer"};
  return kOccupations;
}

std::string corrupt(const std::string& value, double rate,
                    std::mt19937_64& rng) {
  if (rate <= 0.0) return value;
  std::bernoulli_distribution hit(rate);
  std::uniform_int_distribution<int> op(0, 3);
  std::string out;
  out.reserve(value.size() + 4);
  for (std::size_t i = 0; i < value.size(); ++i) {
    const char c = value[i];
    if (!hit(rng)) {
      out.push_back(c);
      continue;
    }
    switch (op(rng)) {
      case 0:  // substitute
        out.push_back(same_class_char(c, rng));
        break;
      case 1:  // insert before
        out.push_back(same_class_char(c, rng));
        out.push_back(c);
        break;
      case 2:  // delete
        break;
      case 3:  // transpose with next
        if (i + 1 < value.size()) {
          out.push_back(value[i + 1]);
          out.push_back(c);
          ++i;
        } else {
          out.push_back(c);
        }
        break;
    }
  }
  return out;
}

Corpus gen_synthetic_corpus(const CorpusParams& params) {
  if (!(params.overlap >= 0.0 && params.overlap <= 1.0)) {
    throw ContractError("overlap must lie in [0, 1]");
  }
  if (!(params.typo_rate >= 0.0 && params.typo_rate <= 1.0)) {
    throw ContractError("typo_rate must lie in [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  const Schema schema = synthetic_schema();
  const auto n_shared = static_cast<std::size_t>(std::llround(
      params.overlap * static_cast<double>(std::min(params.n_a, params.n_b))));

  const auto entities =
      draw_entities(params.n_a + params.n_b - n_shared, rng);

  // Entities [0, n_a) live in A. A random subset of them is shared with B;
  // B's remaining records are entities [n_a, end).
  std::vector<std::size_t> a_order(params.n_a);
  for (std::size_t i = 0; i < a_order.size(); ++i) a_order[i] = i;
  std::shuffle(a_order.begin(), a_order.end(), rng);
  std::vector<std::size_t> shared(a_order.begin(), a_order.begin() + n_shared);
  std::sort(shared.begin(), shared.end());

  std::vector<Record> a_records;
  a_records.reserve(params.n_a);
  for (std::size_t i = 0; i < params.n_a; ++i) {
    a_records.push_back(
        make_record(fmt::format("A-{:06}", i), entities[i], schema, rng));
  }

  struct BSource {
    std::size_t entity;
    bool shared;
  };
  std::vector<BSource> b_sources;
  for (auto e : shared) b_sources.push_back({e, true});
  for (std::size_t e = params.n_a; e < entities.size(); ++e) {
    b_sources.push_back({e, false});
  }
  std::shuffle(b_sources.begin(), b_sources.end(), rng);

  std::vector<Record> b_records;
  std::vector<std::pair<RecordId, RecordId>> truth;
  b_records.reserve(b_sources.size());
  for (std::size_t j = 0; j < b_sources.size(); ++j) {
    Qid qid = entities[b_sources[j].entity];
    if (b_sources[j].shared) {
      for (auto& v : qid) v = corrupt(v, params.typo_rate, rng);
    }
    Record rec = make_record(fmt::format("B-{:06}", j), qid, schema, rng);
    if (b_sources[j].shared) {
      truth.emplace_back(a_records[b_sources[j].entity].id, rec.id);
    }
    b_records.push_back(std::move(rec));
  }

  return Corpus{Database("A", schema, std::move(a_records)),
                Database("B", schema, std::move(b_records)),
                GroundTruth(std::move(truth))};
}

}  // namespace linksim
