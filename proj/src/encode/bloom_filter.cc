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

#include "linksim/encode/bloom_filter.h"

#include <bit>

#include "linksim/encode/hex.h"
#include "linksim/errors.h"

namespace linksim {

BloomFilter::BloomFilter(std::size_t length, std::string params_fingerprint)
    : length_(length),
      fingerprint_(std::move(params_fingerprint)),
      words_((length + 63) / 64, 0) {}

void BloomFilter::set(std::size_t pos) {
  if (pos >= length_) throw ContractError("bloom filter position out of range");
  words_[pos / 64] |= std::uint64_t{1} << (pos % 64);
}

bool BloomFilter::test(std::size_t pos) const {
  if (pos >= length_) return false;
  return (words_[pos / 64] >> (pos % 64)) & 1u;
}

std::size_t BloomFilter::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BloomFilter::and_count(const BloomFilter& other) const {
  if (other.length_ != length_) {
    throw ContractError("bloom filters differ in length");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

std::vector<std::size_t> BloomFilter::set_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

std::string BloomFilter::to_hex() const {
  std::vector<std::uint8_t> bytes(4 + (length_ + 7) / 8, 0);
  const auto len = static_cast<std::uint32_t>(length_);
  bytes[0] = static_cast<std::uint8_t>(len >> 24);
  bytes[1] = static_cast<std::uint8_t>(len >> 16);
  bytes[2] = static_cast<std::uint8_t>(len >> 8);
  bytes[3] = static_cast<std::uint8_t>(len);
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) bytes[4 + i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  }
  return linksim::to_hex(bytes);
}

BloomFilter BloomFilter::from_hex(std::string_view hex,
                                  std::string params_fingerprint) {
  const auto bytes = linksim::from_hex(hex);
  if (bytes.size() < 4) throw ParseError("bloom filter lacks length prefix");
  const std::size_t len = std::size_t{bytes[0]} << 24 |
                          std::size_t{bytes[1]} << 16 |
                          std::size_t{bytes[2]} << 8 | std::size_t{bytes[3]};
  if (bytes.size() != 4 + (len + 7) / 8) {
    throw ParseError("bloom filter length prefix disagrees with payload");
  }
  BloomFilter f(len, std::move(params_fingerprint));
  for (std::size_t i = 0; i < len; ++i) {
    if (bytes[4 + i / 8] & (0x80 >> (i % 8))) f.set(i);
  }
  for (std::size_t i = len; i < (bytes.size() - 4) * 8; ++i) {
    if (bytes[4 + i / 8] & (0x80 >> (i % 8))) {
      throw ParseError("bloom filter has bits set past its length");
    }
  }
  return f;
}

}  // namespace linksim
