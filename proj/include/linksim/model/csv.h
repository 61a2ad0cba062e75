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

#ifndef LINKSIM_MODEL_CSV_H_
#define LINKSIM_MODEL_CSV_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace linksim::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line
// breaks. A trailing newline does not produce an empty row. Throws
// ParseError carrying the 1-based line of the offending row.
std::vector<Row> read(std::istream& in);

void write_row(std::ostream& out, const Row& row);

}  // namespace linksim::csv

#endif  // LINKSIM_MODEL_CSV_H_
