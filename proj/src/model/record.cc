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

#include "linksim/model/record.h"

#include <algorithm>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

RecordId::RecordId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw ContractError("record id must not be empty");
}

Database::Database(std::string name, Schema schema, std::vector<Record> records)
    : name_(std::move(name)),
      schema_(std::move(schema)),
      records_(std::move(records)) {
  index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    if (r.qid.size() != schema_.qid_arity() ||
        r.pd.size() != schema_.pd_arity()) {
      throw ContractError(fmt::format(
          "record {} has arity ({}, {}), schema expects ({}, {})",
          r.id.value(), r.qid.size(), r.pd.size(), schema_.qid_arity(),
          schema_.pd_arity()));
    }
    index_.emplace_back(r.id, i);
  }
  std::sort(index_.begin(), index_.end());
  auto dup = std::adjacent_find(
      index_.begin(), index_.end(),
      [](const auto& x, const auto& y) { return x.first == y.first; });
  if (dup != index_.end()) {
    throw IntegrityError(
        fmt::format("duplicate record id \"{}\" in database \"{}\"",
                    dup->first.value(), name_));
  }
}

const Record* Database::find(const RecordId& id) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const RecordId& key) { return entry.first < key; });
  if (it == index_.end() || it->first != id) return nullptr;
  return &records_[it->second];
}

GroundTruth::GroundTruth(std::vector<std::pair<RecordId, RecordId>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<RecordId> left, right;
  for (const auto& [l, r] : pairs_) {
    left.push_back(l);
    right.push_back(r);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (std::adjacent_find(left.begin(), left.end()) != left.end() ||
      std::adjacent_find(right.begin(), right.end()) != right.end()) {
    throw IntegrityError("ground truth is not one-to-one");
  }
}

bool GroundTruth::contains(const RecordId& left, const RecordId& right) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            std::make_pair(left, right));
}

}  // namespace linksim
