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

#include "linksim/model/database_io.h"

#include <fstream>
#include <map>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "linksim/errors.h"
#include "linksim/model/csv.h"
#include "linksim/model/derive.h"

namespace linksim {

namespace {

struct DerivationFailures {
  std::size_t count = 0;
  std::string first;
};

std::string apply_rule(const DerivedRule& rule, const std::string& source,
                       const std::string& record_id,
                       DerivationFailures& failures) {
  if (source.empty()) return "";
  try {
    switch (rule.kind) {
      case DerivedKind::kAgeFromDob:
        return derive_age(source, rule.reference_year);
    }
  } catch (const DerivationError& e) {
    if (failures.count++ == 0) {
      failures.first = fmt::format("record {}: {}", record_id, e.what());
    }
  }
  return "";
}

}  // namespace

Database read_database(std::istream& in, const Schema& schema,
                       std::string name) {
  const auto rows = csv::read(in);
  if (rows.empty()) throw ParseError("missing header row", 1);
  const csv::Row& header = rows.front();

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!column.emplace(header[i], i).second) {
      throw ParseError(fmt::format("duplicate column \"{}\"", header[i]), 1);
    }
  }
  auto locate = [&](const std::string& attr) {
    auto it = column.find(attr);
    if (it == column.end()) {
      throw ParseError(fmt::format("header lacks column \"{}\"", attr), 1);
    }
    return it->second;
  };
  const std::size_t id_col = locate("id");
  std::vector<std::size_t> qid_cols, pd_cols;
  for (const auto& a : schema.qid_attrs()) qid_cols.push_back(locate(a.name));
  for (const auto& p : schema.pd_attrs()) pd_cols.push_back(locate(p));
  if (header.size() != 1 + qid_cols.size() + pd_cols.size()) {
    throw ParseError("header has columns the schema does not name", 1);
  }

  DerivationFailures failures;
  std::vector<Record> records;
  records.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    if (row.size() != header.size()) {
      throw ParseError(fmt::format("row {} has {} fields, header has {}", r + 1,
                                   row.size(), header.size()),
                       r + 1);
    }
    if (row[id_col].empty()) {
      throw ParseError(fmt::format("row {} has an empty id", r + 1), r + 1);
    }
    Record rec{RecordId(row[id_col]), {}, {}};
    for (auto c : qid_cols) rec.qid.push_back(row[c]);
    for (auto c : pd_cols) rec.pd.push_back(row[c]);
    for (const auto& rule : schema.derived()) {
      std::string source;
      if (auto q = schema.qid_index(rule.source_attr)) {
        source = rec.qid[*q];
      } else {
        source = rec.pd[*schema.pd_index(rule.source_attr)];
      }
      rec.pd.push_back(apply_rule(rule, source, rec.id.value(), failures));
    }
    records.push_back(std::move(rec));
  }
  if (failures.count > 0) {
    spdlog::warn("{}: {} derived value(s) left empty (first: {})", name,
                 failures.count, failures.first);
  }
  return Database(std::move(name), schema, std::move(records));
}

Database load_database(const std::filesystem::path& path, const Schema& schema,
                       std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open {}", path.string()));
  if (name.empty()) name = path.stem().string();
  return read_database(in, schema, std::move(name));
}

void write_database(const Database& db, std::ostream& out) {
  const Schema& schema = db.schema();
  csv::Row header{"id"};
  for (const auto& a : schema.qid_attrs()) header.push_back(a.name);
  for (const auto& p : schema.pd_attrs()) header.push_back(p);
  csv::write_row(out, header);
  const std::size_t base_pd = schema.pd_attrs().size();
  for (const auto& rec : db.records()) {
    csv::Row row{rec.id.value()};
    row.insert(row.end(), rec.qid.begin(), rec.qid.end());
    row.insert(row.end(), rec.pd.begin(), rec.pd.begin() + base_pd);
    csv::write_row(out, row);
  }
}

void write_database(const Database& db, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  write_database(db, out);
}

GroundTruth load_ground_truth(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open {}", path.string()));
  const auto rows = csv::read(in);
  std::vector<std::pair<RecordId, RecordId>> pairs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) {
      throw ParseError("ground truth rows need two fields", r + 1);
    }
    pairs.emplace_back(RecordId(rows[r][0]), RecordId(rows[r][1]));
  }
  return GroundTruth(std::move(pairs));
}

void write_ground_truth(const GroundTruth& truth, std::ostream& out) {
  csv::write_row(out, {"id_a", "id_b"});
  for (const auto& [l, r] : truth.pairs()) {
    csv::write_row(out, {l.value(), r.value()});
  }
}

void write_ground_truth(const GroundTruth& truth,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  write_ground_truth(truth, out);
}

}  // namespace linksim
