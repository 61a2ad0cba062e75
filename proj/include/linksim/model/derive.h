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

#ifndef LINKSIM_MODEL_DERIVE_H_
#define LINKSIM_MODEL_DERIVE_H_

#include <string>
#include <string_view>

namespace linksim {

// Maps a two-digit year: 00-29 -> 2000-2029, 30-99 -> 1930-1999.
int expand_two_digit_year(int yy);

// Age in whole years for a dd/mm/yy date of birth, ignoring day of year.
// Throws DerivationError for anything that is not a real calendar date.
std::string derive_age(std::string_view dob, int reference_year);

}  // namespace linksim

#endif  // LINKSIM_MODEL_DERIVE_H_
