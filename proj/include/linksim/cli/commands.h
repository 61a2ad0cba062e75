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

#ifndef LINKSIM_CLI_COMMANDS_H_
#define LINKSIM_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "linksim/audit/auditor.h"
#include "linksim/errors.h"

namespace linksim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIntegrity = 2;

// Bad command-line use that the argument parser cannot see (an empty
// reports directory, for one).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GenArgs {
  std::size_t n_a = 100;
  std::size_t n_b = 100;
  double overlap = 0.5;
  double typo_rate = 0.0;
  std::uint64_t seed = 0;
  std::filesystem::path out = ".";
};

// Writes a.csv, b.csv and truth.csv.
int cmd_gen(const GenArgs& args, std::ostream& out);

// Writes transcript.jsonl, suf.csv, puf.csv, locals.json and audit.json
// under `out_dir`. Nothing is written if the config is rejected.
int cmd_run(const std::filesystem::path& config,
            const std::filesystem::path& out_dir, std::ostream& out);

struct AuditArgs {
  std::filesystem::path transcript;
  std::filesystem::path locals_dir;
  std::filesystem::path out_dir;
  // Unset fields fall back to the run's audit.json, then to defaults.
  std::optional<AuditMode> mode;
  std::optional<std::string> category_attr;
  std::optional<double> flag_threshold;
  std::optional<std::filesystem::path> matrix;
  std::optional<std::filesystem::path> collusion;
};

// Writes one JSON report per party (and pair) plus matrix.txt and
// matrix.json. Returns kExitIntegrity on any deviation.
int cmd_audit(const AuditArgs& args, std::ostream& out);

// Summarizes every report in `reports_dir`, grouped by variant.
int cmd_report(const std::filesystem::path& reports_dir, std::ostream& out,
               const std::optional<std::filesystem::path>& matrix = {});

// Parses argv and dispatches; maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace linksim

#endif  // LINKSIM_CLI_COMMANDS_H_
