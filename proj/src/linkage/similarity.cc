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

#include "linksim/linkage/similarity.h"

#include <algorithm>

#include <fmt/format.h>

#include "linksim/encode/qgram.h"
#include "linksim/errors.h"

namespace linksim {

SimilarityScore::SimilarityScore(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ContractError(fmt::format("similarity {} outside [0, 1]", value));
  }
}

double multiset_dice(std::vector<std::string> a, std::vector<std::string> b) {
  if (a.empty() && b.empty()) return 0.0;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return 2.0 * static_cast<double>(common.size()) /
         static_cast<double>(a.size() + b.size());
}

namespace {

double attribute_dice(const std::string& a, const std::string& b) {
  auto ga = qgrams(a, 2, false);
  auto gb = qgrams(b, 2, false);
  if (ga.empty() || gb.empty()) {
    return qgrams(a, 1, false) == qgrams(b, 1, false) ? 1.0 : 0.0;
  }
  return multiset_dice(std::move(ga), std::move(gb));
}

}  // namespace

SimilarityScore plain_similarity(const std::vector<std::string>& qid_a,
                                 const std::vector<std::string>& qid_b,
                                 const Schema& schema) {
  const std::size_t n = schema.qid_arity();
  if (qid_a.size() != n || qid_b.size() != n) {
    throw ContractError(fmt::format(
        "QID arity mismatch: {} vs {} (schema {})", qid_a.size(),
        qid_b.size(), n));
  }
  double weighted = 0.0;
  double live_weight = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool ea = qid_a[i].empty();
    const bool eb = qid_b[i].empty();
    if (ea && eb) continue;
    const double w = schema.qid_attrs()[i].weight;
    live_weight += w;
    if (ea || eb) continue;
    weighted += w * attribute_dice(qid_a[i], qid_b[i]);
  }
  if (live_weight <= 0.0) return SimilarityScore(0.0);
  return SimilarityScore(std::clamp(weighted / live_weight, 0.0, 1.0));
}

SimilarityScore bloom_dice(const BloomFilter& a, const BloomFilter& b) {
  if (a.length() != b.length() ||
      a.params_fingerprint() != b.params_fingerprint()) {
    throw ContractError("bloom filters come from different encodings");
  }
  const std::size_t total = a.popcount() + b.popcount();
  if (total == 0) return SimilarityScore(0.0);
  return SimilarityScore(2.0 * static_cast<double>(a.and_count(b)) /
                         static_cast<double>(total));
}

}  // namespace linksim
