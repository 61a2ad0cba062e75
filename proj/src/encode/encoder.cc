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

#include "linksim/encode/encoder.h"

#include <fmt/format.h>

#include "linksim/encode/hex.h"
#include "linksim/encode/qgram.h"
#include "linksim/errors.h"

namespace linksim {

void EncodingParams::validate() const {
  if (length < 64) throw ContractError("bloom filter length must be >= 64");
  if (num_hashes < 1 || num_hashes > 64) {
    throw ContractError("hash function count must lie in [1, 64]");
  }
  if (q < 1 || q > 3) throw ContractError("q-gram size must be 1, 2 or 3");
}

std::string params_fingerprint(const EncodingParams& params,
                               const SecretKey& key) {
  const std::string desc =
      fmt::format("clk|l={}|k={}|q={}|pad={}", params.length,
                  params.num_hashes, params.q, params.pad ? 1 : 0);
  const Digest d = hmac_sha256(key, desc);
  return to_hex(std::span<const std::uint8_t>(d.data(), 8));
}

namespace {

std::uint64_t load_u64(const Digest& d) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | d[i];
  return v;
}

}  // namespace

BloomFilter clk_encode(const std::vector<std::string>& qid,
                       const EncodingParams& params, const SecretKey& key) {
  params.validate();
  BloomFilter filter(params.length, params_fingerprint(params, key));
  for (std::size_t attr = 0; attr < qid.size(); ++attr) {
    for (const auto& gram : qgrams(qid[attr], params.q, params.pad)) {
      const std::string tail = fmt::format("{}|{}", attr, gram);
      const std::uint64_t len = params.length;
      const std::uint64_t h1 = load_u64(hmac_sha256(key, "h1|" + tail)) % len;
      const std::uint64_t h2 = load_u64(hmac_sha256(key, "h2|" + tail)) % len;
      for (std::uint64_t j = 0; j < params.num_hashes; ++j) {
        filter.set(static_cast<std::size_t>((h1 + j * h2) % len));
      }
    }
  }
  return filter;
}

EncodedRecordId encode_record_id(const RecordId& id, const SecretKey& key) {
  return EncodedRecordId(to_hex(hmac_sha256(key, "rid|" + id.value())));
}

std::vector<EncodedRecord> encode_database(const Database& db,
                                           const EncodingParams& params,
                                           const SecretKey& key) {
  params.validate();
  std::vector<EncodedRecord> out;
  out.reserve(db.size());
  for (const auto& rec : db.records()) {
    out.push_back({encode_record_id(rec.id, key),
                   clk_encode(rec.qid, params, key)});
  }
  return out;
}

}  // namespace linksim
