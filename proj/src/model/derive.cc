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

#include "linksim/model/derive.h"

#include <charconv>
#include <chrono>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

int expand_two_digit_year(int yy) { return yy < 30 ? 2000 + yy : 1900 + yy; }

namespace {

int two_digits(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.size() != 2 || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DerivationError(fmt::format("\"{}\" is not a dd/mm/yy date", whole));
  }
  return v;
}

}  // namespace

std::string derive_age(std::string_view dob, int reference_year) {
  if (dob.size() != 8 || dob[2] != '/' || dob[5] != '/') {
    throw DerivationError(fmt::format("\"{}\" is not a dd/mm/yy date", dob));
  }
  const int day = two_digits(dob.substr(0, 2), dob);
  const int month = two_digits(dob.substr(3, 2), dob);
  const int year = expand_two_digit_year(two_digits(dob.substr(6, 2), dob));
  const std::chrono::year_month_day date{
      std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
      std::chrono::day{static_cast<unsigned>(day)}};
  if (!date.ok()) {
    throw DerivationError(fmt::format("\"{}\" is not a calendar date", dob));
  }
  if (year > reference_year) {
    throw DerivationError(fmt::format("\"{}\" lies after the reference year {}",
                                      dob, reference_year));
  }
  return std::to_string(reference_year - year);
}

}  // namespace linksim
