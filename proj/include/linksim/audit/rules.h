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

#ifndef LINKSIM_AUDIT_RULES_H_
#define LINKSIM_AUDIT_RULES_H_

#include <vector>

#include "linksim/audit/fact.h"
#include "linksim/audit/observations.h"

namespace linksim {

// Single-party rule base, keyed on what arrived in the inbox:
//   plain IdQidList from an owner      -> sees_plain_qid_of(that db)
//   IdQidList from both owners         -> sees_similarity_scores,
//                                         sees_match_count
//   MatchBackflow at an owner          -> knows_match_status_of_own_record
//                                         (all own ids: matched ones by
//                                         backflow, the rest by complement)
//   MatchBackflow elsewhere,
//   MatchIdPairs                       -> sees_match_count
//   PdWithMid from an owner            -> sees_pd_of_matched(that db)
//   PdWithId from an owner             -> sees_pd_of_matched and
//                                         sees_pd_of_nonmatched(that db)
//   SufFile                            -> sees_pd_of_matched(both dbs)
// Output is sorted and deterministic.
std::vector<Fact> derive_facts(const ObservationSet& obs,
                               const RunLocals& locals);

// Facts that only the union of two parties' holdings supports:
//   owner + linkage unit, TDL  -> sees_plain_qid_of(other db),
//                                 knows_match_status_of_own_record
//   owner + linkage unit, PPRL -> encoding_params_exposed(other db)
//   owner + data merger        -> can_join_qid_to_pd(other db) over the
//                                 owner's matched records
//   linkage unit + data merger -> can_join_qid_to_pd per db with plain QIDs;
//                                 with every record's QIDs and payload of
//                                 both dbs, can_reconstruct_full_databases
// Passing the same observation set twice evaluates a merged party.
std::vector<Fact> derive_collusion_facts(const ObservationSet& x,
                                         const ObservationSet& y,
                                         const RunLocals& locals);

// Folds facts making the same claim into one, uniting bases and subjects,
// and sorts the result.
std::vector<Fact> merge_facts(std::vector<Fact> facts);

}  // namespace linksim

#endif  // LINKSIM_AUDIT_RULES_H_
