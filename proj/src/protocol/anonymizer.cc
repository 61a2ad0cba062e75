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

#include "linksim/protocol/anonymizer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

std::optional<double> as_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return fmt::format("{}", static_cast<long long>(v));
  }
  return fmt::format("{}", v);
}

}  // namespace

Puf da_anonymize(const Suf& suf, const SdcParams& sdc) {
  std::vector<std::string> header = suf.header();
  header.erase(header.begin());  // MatchId

  std::vector<bool> keep(header.size(), true);
  std::vector<std::vector<const SdcRule*>> col_rules(header.size());
  for (const auto& rule : sdc.rules) {
    auto it = std::find(header.begin(), header.end(), rule.column);
    if (it == header.end()) {
      throw ConfigError(
          fmt::format("anonymisation rule names unknown column \"{}\"",
                      rule.column));
    }
    const auto c = static_cast<std::size_t>(it - header.begin());
    if (rule.op == SdcRule::Op::kDrop) {
      keep[c] = false;
    } else {
      if (rule.op == SdcRule::Op::kRound && !(rule.value > 0.0)) {
        throw ConfigError("rounding base must be positive");
      }
      col_rules[c].push_back(&rule);
    }
  }

  Puf puf;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (keep[c]) puf.columns.push_back(header[c]);
  }

  std::vector<std::vector<std::string>> rows;
  rows.reserve(suf.rows.size());
  for (const auto& r : suf.rows) {
    std::vector<std::string> cells = r.pd_left;
    cells.insert(cells.end(), r.pd_right.begin(), r.pd_right.end());
    std::vector<std::string> out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!keep[c]) continue;
      std::string v = cells[c];
      for (const SdcRule* rule : col_rules[c]) {
        auto num = as_number(v);
        if (!num) continue;
        if (rule->op == SdcRule::Op::kRound) {
          v = format_number(std::round(*num / rule->value) * rule->value);
        } else if (*num > rule->value) {
          v = format_number(rule->value);
        }
      }
      out.push_back(std::move(v));
    }
    rows.push_back(std::move(out));
  }

  std::map<std::vector<std::string>, std::size_t> counts;
  for (const auto& r : rows) ++counts[r];
  for (auto& r : rows) {
    if (counts[r] >= sdc.k) puf.rows.push_back(std::move(r));
  }
  return puf;
}

}  // namespace linksim
