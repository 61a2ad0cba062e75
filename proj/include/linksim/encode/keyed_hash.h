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

#ifndef LINKSIM_ENCODE_KEYED_HASH_H_
#define LINKSIM_ENCODE_KEYED_HASH_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace linksim {

using Digest = std::array<std::uint8_t, 32>;

// 32-byte secret shared by the two database owners. There is deliberately
// no serializer: key bytes only enter the process through from_hex() or
// derive_from_seed() and only leave it as HMAC output.
class SecretKey {
 public:
  static constexpr std::size_t kSize = 32;

  explicit SecretKey(const std::array<std::uint8_t, kSize>& bytes)
      : bytes_(bytes) {}
  static SecretKey from_hex(std::string_view hex);
  // Simulation convenience: SHA-256 of a domain tag and the seed.
  static SecretKey derive_from_seed(std::uint64_t seed);

  std::span<const std::uint8_t, kSize> bytes() const { return bytes_; }
  bool operator==(const SecretKey&) const = default;

 private:
  std::array<std::uint8_t, kSize> bytes_;
};

Digest hmac_sha256(const SecretKey& key, std::string_view message);
Digest sha256(std::string_view message);
std::string sha256_hex(std::string_view message);

}  // namespace linksim

#endif  // LINKSIM_ENCODE_KEYED_HASH_H_
