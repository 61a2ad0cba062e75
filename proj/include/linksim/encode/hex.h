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

#ifndef LINKSIM_ENCODE_HEX_H_
#define LINKSIM_ENCODE_HEX_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linksim {

// Lowercase hex.
std::string to_hex(std::span<const std::uint8_t> bytes);
// Accepts either case; throws ParseError on odd length or a non-hex digit.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace linksim

#endif  // LINKSIM_ENCODE_HEX_H_
