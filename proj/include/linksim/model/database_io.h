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

#ifndef LINKSIM_MODEL_DATABASE_IO_H_
#define LINKSIM_MODEL_DATABASE_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "linksim/model/record.h"
#include "linksim/model/schema.h"

namespace linksim {

// Header must name `id` plus every base QID and PD attribute of `schema`,
// in any order. Derived columns are computed, never read.
Database load_database(const std::filesystem::path& path, const Schema& schema,
                       std::string name = "");
Database read_database(std::istream& in, const Schema& schema,
                       std::string name);

// Writes `id`, QID columns and base PD columns. Derived columns are omitted
// so that load_database(write_database(db)) reproduces db.
void write_database(const Database& db, std::ostream& out);
void write_database(const Database& db, const std::filesystem::path& path);

GroundTruth load_ground_truth(const std::filesystem::path& path);
void write_ground_truth(const GroundTruth& truth, std::ostream& out);
void write_ground_truth(const GroundTruth& truth,
                        const std::filesystem::path& path);

}  // namespace linksim

#endif  // LINKSIM_MODEL_DATABASE_IO_H_
