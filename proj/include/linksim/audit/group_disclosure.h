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

#ifndef LINKSIM_AUDIT_GROUP_DISCLOSURE_H_
#define LINKSIM_AUDIT_GROUP_DISCLOSURE_H_

#include <string>
#include <vector>

#include "linksim/audit/fact.h"
#include "linksim/audit/observations.h"

namespace linksim {

inline constexpr double kDefaultGroupFlagThreshold = 0.1;

// Per-category match rates from everything the data merger holds under the
// no-backflow flow: the payload of every record and the matched id pairs.
// For each database whose payload has `category_attr`, a category whose
// rate differs from that database's overall rate by at least
// `flag_threshold` yields one group_disclosure fact.
//
// The separation-principle merger never sees unmatched payload, so calling
// this for such a run is a ContractError, as is an unknown attribute.
std::vector<Fact> group_disclosure(const ObservationSet& dm,
                                   ProtocolVariant variant,
                                   const RunLocals& locals,
                                   const std::string& category_attr,
                                   double flag_threshold =
                                       kDefaultGroupFlagThreshold);

}  // namespace linksim

#endif  // LINKSIM_AUDIT_GROUP_DISCLOSURE_H_
