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

#ifndef LINKSIM_ENCODE_QGRAM_H_
#define LINKSIM_ENCODE_QGRAM_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace linksim {

inline constexpr char kPadMarker = '#';

// All length-q substrings of the lowercased value, in order, with
// multiplicity. With `pad` the value is first wrapped in q-1 markers on each
// side. An empty value yields no grams; a value shorter than q (unpadded)
// yields none either.
std::vector<std::string> qgrams(std::string_view value, std::size_t q,
                                bool pad);

}  // namespace linksim

#endif  // LINKSIM_ENCODE_QGRAM_H_
