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

#ifndef LINKSIM_MODEL_RECORD_H_
#define LINKSIM_MODEL_RECORD_H_

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linksim/model/schema.h"

namespace linksim {

// Opaque per-database record identifier. Never empty.
class RecordId {
 public:
  explicit RecordId(std::string value);
  const std::string& value() const { return value_; }
  auto operator<=>(const RecordId&) const = default;

 private:
  std::string value_;
};

struct Record {
  RecordId id;
  std::vector<std::string> qid;  // empty string marks a missing value
  std::vector<std::string> pd;

  bool operator==(const Record&) const = default;
};

class Database {
 public:
  // Throws IntegrityError on a repeated id and ContractError when a record
  // does not match the schema arity.
  Database(std::string name, Schema schema, std::vector<Record> records);

  const std::string& name() const { return name_; }
  const Schema& schema() const { return schema_; }
  const std::vector<Record>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Returns nullptr when the id is absent.
  const Record* find(const RecordId& id) const;

  bool operator==(const Database& other) const {
    return name_ == other.name_ && schema_ == other.schema_ &&
           records_ == other.records_;
  }

 private:
  std::string name_;
  Schema schema_;
  std::vector<Record> records_;
  std::vector<std::pair<RecordId, std::size_t>> index_;  // sorted by id
};

// Pairs (A-side id, B-side id) known to refer to the same entity. One-to-one.
class GroundTruth {
 public:
  GroundTruth() = default;
  explicit GroundTruth(std::vector<std::pair<RecordId, RecordId>> pairs);

  const std::vector<std::pair<RecordId, RecordId>>& pairs() const {
    return pairs_;
  }
  std::size_t size() const { return pairs_.size(); }
  bool contains(const RecordId& left, const RecordId& right) const;

  bool operator==(const GroundTruth&) const = default;

 private:
  std::vector<std::pair<RecordId, RecordId>> pairs_;  // sorted
};

}  // namespace linksim

#endif  // LINKSIM_MODEL_RECORD_H_
