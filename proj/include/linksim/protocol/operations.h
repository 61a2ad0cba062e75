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

#ifndef LINKSIM_PROTOCOL_OPERATIONS_H_
#define LINKSIM_PROTOCOL_OPERATIONS_H_

#include <optional>
#include <string>
#include <utility>

#include "linksim/encode/encoder.h"
#include "linksim/linkage/blocking.h"
#include "linksim/linkage/classify.h"
#include "linksim/linkage/match_ids.h"
#include "linksim/model/record.h"
#include "linksim/protocol/payload.h"

// The per-step computations of each role. Party state machines call these;
// they are exposed so every step can be exercised on its own.
namespace linksim {

// Shared by the two database owners only.
struct EncodingContext {
  EncodingParams params;
  SecretKey key;
};

// Step 1 at a database owner: (id, qid) in TDL, (eid, filter) in PPRL.
// Payload columns are never included. PPRL without `enc` is a
// ContractError.
Payload do_prepare_step1(const Database& db, Mode mode,
                         const EncodingContext* enc);

struct LinkConfig {
  double threshold = 0.8;
  BlockingStrategy blocking;
  // QID layout and weights; required for TDL.
  std::optional<Schema> schema;
};

// Compares every candidate pair from the two step-1 payloads (plain
// similarity in TDL, Bloom Dice in PPRL) and classifies them. Payloads that
// do not fit `mode` are a ContractError.
MatchSet lu_link(const Payload& step1_a, const Payload& step1_b, Mode mode,
                 const LinkConfig& config);

// Step 2 (separation principle): each owner gets only its own side of every
// matched pair. ContractError under the no-backflow flow.
std::pair<MatchBackflow, MatchBackflow> lu_backflow(
    const MatchIdAssignment& assignment, Flow flow);

// Step 2 (no backflow): M^id in (left, right) order.
MatchIdPairs lu_match_pairs(const MatchSet& matches);

// Step 3 (separation principle): (match id, pd) for the matched records
// named in `backflow`, nothing else. An id that is not in `db` is an
// IntegrityError.
PdWithMid do_attach_pd(const Database& db, const MatchBackflow& backflow,
                       Mode mode, const EncodingContext* enc);

// Step 3 (no backflow): (id or eid, pd) for every record.
PdWithId do_send_all_pd(const Database& db, Mode mode,
                        const EncodingContext* enc);

// Joins the two sides on match id. A match id present on one side only is
// an IntegrityError naming it.
Suf dm_merge_sep(const PdWithMid& pd_a, const PdWithMid& pd_b);

// Looks up both payload rows of every pair in M^id and assigns fresh match
// ids in (left, right) order. Unmatched rows do not reach the SUF. A
// dangling id is an IntegrityError.
Suf dm_merge_nbf(const MatchIdPairs& pairs, const PdWithId& pd_a,
                 const PdWithId& pd_b, const std::string& project);

}  // namespace linksim

#endif  // LINKSIM_PROTOCOL_OPERATIONS_H_
