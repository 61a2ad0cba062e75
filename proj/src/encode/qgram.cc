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

#include "linksim/encode/qgram.h"

#include <cctype>

#include "linksim/errors.h"

namespace linksim {

std::vector<std::string> qgrams(std::string_view value, std::size_t q,
                                bool pad) {
  if (q == 0) throw ContractError("q-gram size must be at least 1");
  std::vector<std::string> grams;
  if (value.empty()) return grams;
  std::string s;
  if (pad) s.append(q - 1, kPadMarker);
  for (char c : value) {
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (pad) s.append(q - 1, kPadMarker);
  if (s.size() < q) return grams;
  grams.reserve(s.size() - q + 1);
  for (std::size_t i = 0; i + q <= s.size(); ++i) grams.push_back(s.substr(i, q));
  return grams;
}

}  // namespace linksim
