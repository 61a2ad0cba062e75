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

#include "linksim/linkage/blocking.h"

#include <cctype>
#include <charconv>
#include <map>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("bad blocking strategy \"{}\"", whole));
  }
  return v;
}

}  // namespace

BlockingStrategy parse_blocking(std::string_view text) {
  if (text.empty() || text == "none") return {};
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{}
                                                   : text.substr(colon + 1);
  if (head == "first-char") {
    return {BlockingStrategy::Kind::kFirstCharOfAttr, parse_count(arg, text)};
  }
  if (head == "filter-prefix") {
    const auto bits = parse_count(arg, text);
    if (bits == 0) throw ConfigError("filter-prefix needs at least one bit");
    return {BlockingStrategy::Kind::kFilterPrefix, bits};
  }
  throw ConfigError(fmt::format("unknown blocking strategy \"{}\"", text));
}

std::string to_string(const BlockingStrategy& strategy) {
  switch (strategy.kind) {
    case BlockingStrategy::Kind::kNone:
      return "none";
    case BlockingStrategy::Kind::kFirstCharOfAttr:
      return fmt::format("first-char:{}", strategy.param);
    case BlockingStrategy::Kind::kFilterPrefix:
      return fmt::format("filter-prefix:{}", strategy.param);
  }
  return "none";
}

std::string block_key(const std::vector<std::string>& qid,
                      const BlockingStrategy& strategy) {
  switch (strategy.kind) {
    case BlockingStrategy::Kind::kNone:
      return "";
    case BlockingStrategy::Kind::kFirstCharOfAttr: {
      if (strategy.param >= qid.size()) {
        throw ContractError("blocking attribute index out of range");
      }
      const std::string& v = qid[strategy.param];
      if (v.empty()) return "";
      return std::string(
          1, static_cast<char>(std::tolower(static_cast<unsigned char>(v[0]))));
    }
    case BlockingStrategy::Kind::kFilterPrefix:
      throw ContractError("filter-prefix blocking needs encoded records");
  }
  return "";
}

std::string block_key(const BloomFilter& filter,
                      const BlockingStrategy& strategy) {
  switch (strategy.kind) {
    case BlockingStrategy::Kind::kNone:
      return "";
    case BlockingStrategy::Kind::kFirstCharOfAttr:
      throw ContractError("first-char blocking needs plain-text QIDs");
    case BlockingStrategy::Kind::kFilterPrefix: {
      if (strategy.param > filter.length()) {
        throw ContractError("filter prefix longer than the filter");
      }
      // Prefix bits packed MSB-first, then hex; 8 bits -> two digits.
      std::string out;
      unsigned acc = 0;
      std::size_t held = 0;
      for (std::size_t i = 0; i < strategy.param; ++i) {
        acc = acc << 1 | (filter.test(i) ? 1u : 0u);
        if (++held == 4) {
          out.push_back("0123456789abcdef"[acc]);
          acc = 0;
          held = 0;
        }
      }
      if (held) out.push_back("0123456789abcdef"[acc << (4 - held)]);
      return out;
    }
  }
  return "";
}

std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<std::string>& left_keys,
    const std::vector<std::string>& right_keys) {
  std::map<std::string, std::vector<std::size_t>> right_blocks;
  for (std::size_t j = 0; j < right_keys.size(); ++j) {
    right_blocks[right_keys[j]].push_back(j);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < left_keys.size(); ++i) {
    auto it = right_blocks.find(left_keys[i]);
    if (it == right_blocks.end()) continue;
    for (auto j : it->second) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace linksim
