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

#ifndef LINKSIM_MODEL_SCHEMA_H_
#define LINKSIM_MODEL_SCHEMA_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace linksim {

struct QidAttribute {
  std::string name;
  double weight = 0.0;  // comparison weight in [0, 1]

  bool operator==(const QidAttribute&) const = default;
};

enum class DerivedKind { kAgeFromDob };

// Computes a payload column from another column of the same record. The
// target column is appended to the payload after the base attributes.
struct DerivedRule {
  std::string source_attr;
  std::string target_attr;
  DerivedKind kind = DerivedKind::kAgeFromDob;
  int reference_year = 2025;

  bool operator==(const DerivedRule&) const = default;
};

// Splits a record layout into quasi-identifier and payload columns.
//
// Invariants (checked on construction, ContractError otherwise):
//   - QID weights lie in [0, 1] and sum to 1 within 1e-9
//   - all attribute names, including derived targets and `id`, are distinct
//   - every derived rule reads an existing base column
class Schema {
 public:
  Schema(std::vector<QidAttribute> qid_attrs, std::vector<std::string> pd_attrs,
         std::vector<DerivedRule> derived = {});

  const std::vector<QidAttribute>& qid_attrs() const { return qid_attrs_; }
  const std::vector<std::string>& pd_attrs() const { return pd_attrs_; }
  const std::vector<DerivedRule>& derived() const { return derived_; }

  std::size_t qid_arity() const { return qid_attrs_.size(); }
  // Base payload columns plus derived targets.
  std::size_t pd_arity() const { return pd_attrs_.size() + derived_.size(); }

  std::vector<std::string> qid_names() const;
  // Payload column names in record order (base, then derived).
  std::vector<std::string> pd_columns() const;

  std::optional<std::size_t> qid_index(const std::string& name) const;
  std::optional<std::size_t> pd_index(const std::string& name) const;

  bool operator==(const Schema&) const = default;

 private:
  std::vector<QidAttribute> qid_attrs_;
  std::vector<std::string> pd_attrs_;
  std::vector<DerivedRule> derived_;
};

// Reads a YAML schema file:
//
//   qid:
//     - {name: FirstN, weight: 0.3}
//   pd: [BP, HbA1c]
//   derived:
//     - {source: DoB, target: Age, kind: age_from_dob, reference_year: 2025}
Schema load_schema(const std::filesystem::path& path);
Schema parse_schema(const std::string& yaml_text);
std::string schema_to_yaml(const Schema& schema);

// Layout produced by gen_synthetic_corpus.
Schema synthetic_schema();

}  // namespace linksim

#endif  // LINKSIM_MODEL_SCHEMA_H_
