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

#ifndef LINKSIM_CLI_RUN_CONFIG_H_
#define LINKSIM_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "linksim/audit/auditor.h"
#include "linksim/model/record.h"
#include "linksim/protocol/engine.h"

namespace linksim {

struct DbSource {
  std::filesystem::path path;
  std::string label;
  std::string context;
};

enum class KeySource { kNone, kFile, kSeed };

// One protocol run, read from YAML:
//
//   variant: nbf-pprl            # sep|nbf - tdl|pprl
//   threshold: 0.8
//   project: demo
//   blocking: none               # none | first-char:N | filter-prefix:N
//   merge_lu_dm: false
//   encoding: {length: 1000, num_hashes: 30, q: 2, pad: true}
//   key: {file: ../secret.hex}   # or {seed: true}, uses `seed`
//   seed: 7
//   schema: synthetic            # or a schema YAML path
//   db_a: {path: a.csv, label: A, context: general-population}
//   db_b: {path: b.csv, label: B, context: hiv-cohort}
//   sdc: {k: 2, rules: [{column: A.Income, op: round, value: 1000}]}
//   audit: {mode: hbc_collusion, category_attr: Occupation,
//           flag_threshold: 0.1}
//
// Relative paths resolve against the config file's directory. Unknown keys
// are rejected. PPRL needs a key and TDL must not have one.
struct RunConfig {
  ProtocolVariant variant;
  double threshold = 0.8;
  std::string project = "demo";
  BlockingStrategy blocking;
  bool merge_lu_dm = false;
  EncodingParams encoding;  // PPRL only
  KeySource key_source = KeySource::kNone;
  std::filesystem::path key_file;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> schema_path;  // nullopt: synthetic
  DbSource db_a;
  DbSource db_b;
  SdcParams sdc;
  AuditMode audit_mode = AuditMode::kHbc;
  std::optional<std::string> category_attr;
  double flag_threshold = kDefaultGroupFlagThreshold;

  Schema schema() const;
  std::optional<SecretKey> key() const;
  RunParams params() const;
};

RunConfig parse_run_config(const std::string& yaml_text,
                           const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace linksim

#endif  // LINKSIM_CLI_RUN_CONFIG_H_
