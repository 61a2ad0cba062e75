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

#ifndef LINKSIM_AUDIT_MATRIX_H_
#define LINKSIM_AUDIT_MATRIX_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "linksim/audit/auditor.h"

namespace linksim {

struct MatrixCell {
  ProtocolVariant variant;
  Role role = Role::kDataOwner;
  // "as_expected", "deviates", or "no_expectation" when the matrix lacks
  // the cell.
  std::string status;
  FactKindSet actual;
  FactKindSet expected;
  FactKindSet extra;
  FactKindSet missing;
};

struct MatrixSummary {
  std::vector<MatrixCell> cells;  // variant-major, roles DO, LU, DM

  bool ok() const;
  std::size_t as_expected() const;
  // A role-by-variant table of fact kinds, then of verdicts, then one line
  // per deviating cell.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

// Judges the single-party reports for `variants` x {DO, LU, DM}. The DO
// cell takes both owners' reports; a merged party fills the LU and DM
// cells. A cell with no report is a CoverageError.
MatrixSummary verify_matrix(const std::vector<LeakageReport>& reports,
                            const ExpectationMatrix& matrix,
                            const std::vector<ProtocolVariant>& variants =
                                all_variants());

}  // namespace linksim

#endif  // LINKSIM_AUDIT_MATRIX_H_
