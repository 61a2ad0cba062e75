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

#include "linksim/encode/keyed_hash.h"

#include <algorithm>

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include "linksim/encode/hex.h"
#include "linksim/errors.h"

namespace linksim {

SecretKey SecretKey::from_hex(std::string_view hex) {
  const auto bytes = linksim::from_hex(hex);
  if (bytes.size() != kSize) {
    throw ConfigError("secret key must be 32 bytes (64 hex digits)");
  }
  std::array<std::uint8_t, kSize> raw;
  std::copy(bytes.begin(), bytes.end(), raw.begin());
  return SecretKey(raw);
}

SecretKey SecretKey::derive_from_seed(std::uint64_t seed) {
  return SecretKey(sha256("linksim/secret-key/" + std::to_string(seed)));
}

Digest hmac_sha256(const SecretKey& key, std::string_view message) {
  Digest out;
  unsigned int len = 0;
  const auto k = key.bytes();
  if (!HMAC(EVP_sha256(), k.data(), static_cast<int>(k.size()),
            reinterpret_cast<const unsigned char*>(message.data()),
            message.size(), out.data(), &len) ||
      len != out.size()) {
    throw Error("HMAC-SHA256 failed");
  }
  return out;
}

Digest sha256(std::string_view message) {
  Digest out;
  SHA256(reinterpret_cast<const unsigned char*>(message.data()),
         message.size(), out.data());
  return out;
}

std::string sha256_hex(std::string_view message) {
  return to_hex(sha256(message));
}

}  // namespace linksim
