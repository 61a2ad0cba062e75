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

#ifndef LINKSIM_ENCODE_ENCODER_H_
#define LINKSIM_ENCODE_ENCODER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "linksim/encode/bloom_filter.h"
#include "linksim/encode/keyed_hash.h"
#include "linksim/model/record.h"

namespace linksim {

// CLK settings. All QID attributes of a record go into one filter.
struct EncodingParams {
  std::size_t length = 1000;
  std::size_t num_hashes = 30;
  std::size_t q = 2;
  bool pad = true;

  // Throws ContractError unless length >= 64, 1 <= num_hashes <= 64 and
  // q in {1, 2, 3}.
  void validate() const;
  bool operator==(const EncodingParams&) const = default;
};

// Keyed, so that the fingerprint on the wire does not let the linkage unit
// confirm guessed parameters.
std::string params_fingerprint(const EncodingParams& params,
                               const SecretKey& key);

// Each q-gram of attribute i sets bits (h1 + j*h2) mod length for
// j = 0..num_hashes-1, with h1 and h2 two HMAC-SHA256 values over the
// attribute index and the gram. Empty attributes contribute nothing.
BloomFilter clk_encode(const std::vector<std::string>& qid,
                       const EncodingParams& params, const SecretKey& key);

class EncodedRecordId {
 public:
  explicit EncodedRecordId(std::string hex) : value_(std::move(hex)) {}
  const std::string& value() const { return value_; }
  auto operator<=>(const EncodedRecordId&) const = default;

 private:
  std::string value_;
};

// Lowercase hex of HMAC-SHA256(key, "rid|" + id).
EncodedRecordId encode_record_id(const RecordId& id, const SecretKey& key);

struct EncodedRecord {
  EncodedRecordId eid;
  BloomFilter filter;
};

// One element per record, same order as db.records(). Payload columns are
// never read.
std::vector<EncodedRecord> encode_database(const Database& db,
                                           const EncodingParams& params,
                                           const SecretKey& key);

}  // namespace linksim

#endif  // LINKSIM_ENCODE_ENCODER_H_
