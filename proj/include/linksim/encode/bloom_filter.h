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

#ifndef LINKSIM_ENCODE_BLOOM_FILTER_H_
#define LINKSIM_ENCODE_BLOOM_FILTER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linksim {

// Fixed-length bit vector holding an encoded QID list. The fingerprint names
// the encoding parameters (and key) that produced it, so filters from
// incompatible encodings are never compared.
class BloomFilter {
 public:
  BloomFilter(std::size_t length, std::string params_fingerprint);

  std::size_t length() const { return length_; }
  const std::string& params_fingerprint() const { return fingerprint_; }

  void set(std::size_t pos);
  bool test(std::size_t pos) const;
  std::size_t popcount() const;
  // |this AND other|; lengths must agree.
  std::size_t and_count(const BloomFilter& other) const;
  std::vector<std::size_t> set_positions() const;

  // Hex of a 4-byte big-endian bit length followed by the bits packed
  // MSB-first into ceil(length / 8) bytes.
  std::string to_hex() const;
  static BloomFilter from_hex(std::string_view hex,
                              std::string params_fingerprint);

  bool operator==(const BloomFilter&) const = default;

 private:
  std::size_t length_;
  std::string fingerprint_;
  std::vector<std::uint64_t> words_;
};

}  // namespace linksim

#endif  // LINKSIM_ENCODE_BLOOM_FILTER_H_
