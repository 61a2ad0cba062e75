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

#include "linksim/cli/commands.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "linksim/audit/matrix.h"
#include "linksim/cli/run_config.h"
#include "linksim/encode/keyed_hash.h"
#include "linksim/errors.h"
#include "linksim/model/database_io.h"
#include "linksim/model/synthetic.h"

namespace linksim {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << text;
  if (!out) throw Error(fmt::format("failed writing {}", path.string()));
}

nlohmann::ordered_json read_json(const fs::path& path) {
  try {
    return nlohmann::ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string pretty(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// Whether `inner` lies under `outer`, comparing normalized absolute paths.
bool is_within(const fs::path& inner, const fs::path& outer) {
  const auto a = fs::weakly_canonical(fs::absolute(inner));
  const auto b = fs::weakly_canonical(fs::absolute(outer));
  auto mismatch = std::mismatch(b.begin(), b.end(), a.begin(), a.end());
  return mismatch.first == b.end();
}

std::string party_list(const std::vector<PartyId>& parties) {
  std::string out;
  for (PartyId p : parties) {
    if (!out.empty()) out += '+';
    out += to_string(p);
  }
  return out;
}

void print_facts(std::ostream& out, const std::vector<Fact>& facts,
                 std::string_view indent) {
  if (facts.empty()) {
    out << indent << "---\n";
    return;
  }
  for (const auto& f : facts) {
    out << indent << to_string(f.kind) << ": " << f.describe() << "\n";
  }
}

}  // namespace

int cmd_gen(const GenArgs& args, std::ostream& out) {
  CorpusParams p;
  p.n_a = args.n_a;
  p.n_b = args.n_b;
  p.overlap = args.overlap;
  p.typo_rate = args.typo_rate;
  p.seed = args.seed;
  const Corpus corpus = gen_synthetic_corpus(p);
  fs::create_directories(args.out);
  write_database(corpus.a, args.out / "a.csv");
  write_database(corpus.b, args.out / "b.csv");
  write_ground_truth(corpus.truth, args.out / "truth.csv");
  out << fmt::format("a.csv: {} records\nb.csv: {} records\ntruth.csv: {} pairs\n",
                     corpus.a.size(), corpus.b.size(), corpus.truth.size());
  return kExitOk;
}

int cmd_run(const fs::path& config_path, const fs::path& out_dir,
            std::ostream& out) {
  const RunConfig config = load_run_config(config_path);
  if (config.key_source == KeySource::kFile &&
      is_within(config.key_file, out_dir)) {
    throw ConfigError("the key file must live outside the output directory");
  }
  const Schema schema = config.schema();
  const Database db_a = load_database(config.db_a.path, schema, config.db_a.label);
  const Database db_b = load_database(config.db_b.path, schema, config.db_b.label);
  const RunResult result =
      run_protocol(config.variant, db_a, db_b, config.params());

  std::ostringstream suf, puf;
  write_suf_csv(result.suf, suf);
  write_puf_csv(result.puf, puf);
  nlohmann::ordered_json audit;
  audit["mode"] = std::string(to_string(config.audit_mode));
  if (config.category_attr) {
    audit["category_attr"] = *config.category_attr;
  } else {
    audit["category_attr"] = nullptr;
  }
  audit["flag_threshold"] = config.flag_threshold;

  fs::create_directories(out_dir);
  write_file(out_dir / "transcript.jsonl", result.transcript.to_jsonl());
  write_file(out_dir / "suf.csv", suf.str());
  write_file(out_dir / "puf.csv", puf.str());
  write_file(out_dir / "locals.json", pretty(locals_to_json(result.locals)));
  write_file(out_dir / "audit.json", pretty(audit));

  out << fmt::format(
      "{}: {} messages, {} matches, {} SUF rows, {} PUF rows -> {}\n",
      to_string(config.variant), result.transcript.messages.size(),
      result.lu_matches.size(), result.suf.rows.size(), result.puf.rows.size(),
      out_dir.string());
  return kExitOk;
}

int cmd_audit(const AuditArgs& args, std::ostream& out) {
  const RunLocals locals =
      locals_from_json(read_json(args.locals_dir / "locals.json"));

  AuditOptions options;
  const fs::path audit_defaults = args.locals_dir / "audit.json";
  if (fs::exists(audit_defaults)) {
    const auto j = read_json(audit_defaults);
    try {
      options.mode = parse_audit_mode(j.at("mode").get<std::string>());
      if (!j.at("category_attr").is_null()) {
        options.category_attr = j.at("category_attr").get<std::string>();
      }
      options.flag_threshold = j.at("flag_threshold").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("{}: {}", audit_defaults.string(), e.what()));
    }
  }
  if (args.mode) options.mode = *args.mode;
  if (args.category_attr) options.category_attr = *args.category_attr;
  if (args.flag_threshold) options.flag_threshold = *args.flag_threshold;
  if (args.matrix) options.matrix = ExpectationMatrix::load(*args.matrix);
  if (args.collusion) {
    options.collusion = CollusionExpectations::load(*args.collusion);
  }

  // The file itself must be the one the run wrote, byte for byte.
  const std::string text = read_file(args.transcript);
  if (sha256_hex(text) != locals.transcript_digest) {
    throw IntegrityError(fmt::format(
        "{} does not match the digest recorded for the run; it was altered",
        args.transcript.string()));
  }
  Transcript transcript;
  transcript.variant = locals.variant;
  transcript.merged_lu_dm = locals.merged_lu_dm;
  transcript.config_fingerprint = locals.config_fingerprint;
  transcript.messages = parse_jsonl(text);
  check_integrity(transcript, locals);

  if (options.mode == AuditMode::kFullyTrusted) {
    out << "fully trusted parties: nothing to audit\n";
    return kExitOk;
  }

  const auto reports = audit_run(transcript, locals, options);
  fs::create_directories(args.out_dir);
  bool deviates = false;
  for (const auto& r : reports) {
    write_file(args.out_dir / (r.name() + ".json"), pretty(report_to_json(r)));
    if (r.verdict.status == VerdictStatus::kDeviates) deviates = true;
    for (const auto& note : r.annotations) {
      out << fmt::format("{}: {}\n", party_list(r.parties), note);
      deviates = true;
    }
  }
  const MatrixSummary summary =
      verify_matrix(reports, options.matrix, {transcript.variant});
  write_file(args.out_dir / "matrix.txt", summary.to_text());
  write_file(args.out_dir / "matrix.json", pretty(summary.to_json()));
  out << summary.to_text();

  for (const auto& r : reports) {
    if (r.parties.size() != 2) continue;
    out << fmt::format("collusion {}: {}", party_list(r.parties),
                       to_string(r.verdict.status));
    if (!r.verdict.extra.empty() || !r.verdict.missing.empty()) {
      out << fmt::format(" (extra {}, missing {})", r.verdict.extra.size(),
                         r.verdict.missing.size());
    }
    out << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& f : r.group_facts) {
      out << fmt::format("{}: {}\n", party_list(r.parties), f.describe());
    }
  }
  return deviates || !summary.ok() ? kExitIntegrity : kExitOk;
}

int cmd_report(const fs::path& reports_dir, std::ostream& out,
               const std::optional<fs::path>& matrix_path) {
  if (!fs::is_directory(reports_dir)) {
    throw UsageError(fmt::format("{} is not a directory", reports_dir.string()));
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(reports_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        entry.path().filename() != "matrix.json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<LeakageReport> reports;
  for (const auto& f : files) reports.push_back(report_from_json(read_json(f)));
  if (reports.empty()) {
    throw UsageError(fmt::format("no reports in {}", reports_dir.string()));
  }
  const ExpectationMatrix matrix =
      matrix_path ? ExpectationMatrix::load(*matrix_path)
                  : ExpectationMatrix::defaults();

  std::vector<ProtocolVariant> covered;
  for (ProtocolVariant v : all_variants()) {
    std::vector<const LeakageReport*> mine;
    for (const auto& r : reports) {
      if (r.variant == v) mine.push_back(&r);
    }
    if (mine.empty()) continue;
    auto ranks = [](const LeakageReport* r) {
      std::vector<int> out{static_cast<int>(r->parties.size())};
      for (PartyId p : r->parties) out.push_back(party_rank(p));
      return out;
    };
    std::stable_sort(mine.begin(), mine.end(), [&](auto* a, auto* b) {
      return ranks(a) < ranks(b);
    });
    out << fmt::format("== {} ==\n", to_string(v));
    for (const auto* r : mine) {
      out << fmt::format("{} [{}]\n", party_list(r->parties),
                         to_string(r->verdict.status));
      print_facts(out, r->facts, "  ");
      if (!r->collusion_facts.empty()) {
        out << "  jointly:\n";
        print_facts(out, r->collusion_facts, "    ");
      }
    }
    bool any_group = false;
    for (const auto* r : mine) {
      for (const auto& f : r->group_facts) {
        if (!any_group) out << "group disclosure findings:\n";
        any_group = true;
        out << fmt::format("  {}: {}\n", party_list(r->parties), f.describe());
      }
    }
    out << "\n";
    try {
      verify_matrix(reports, matrix, {v});
      covered.push_back(v);
    } catch (const CoverageError&) {
      // Variants with partial reports get their listing but no verdict row.
    }
  }
  if (!covered.empty()) out << verify_matrix(reports, matrix, covered).to_text();
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multi-party record linkage simulator and leakage auditor"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic corpus");
  gen_cmd->add_option("--na", gen.n_a, "records in database A");
  gen_cmd->add_option("--nb", gen.n_b, "records in database B");
  gen_cmd->add_option("--overlap", gen.overlap, "fraction of shared entities")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--typo", gen.typo_rate, "per-character edit rate")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out", gen.out, "output directory");

  fs::path config, run_out = "out";
  auto* run_cmd = app.add_subcommand("run", "run one protocol variant");
  run_cmd->add_option("config", config, "run config (YAML)")->required();
  run_cmd->add_option("--out", run_out, "output directory");

  AuditArgs audit;
  std::string mode, matrix, collusion;
  auto* audit_cmd = app.add_subcommand("audit", "audit a run transcript");
  audit_cmd->add_option("transcript", audit.transcript, "transcript.jsonl")
      ->required();
  audit_cmd->add_option("--locals", audit.locals_dir,
                        "directory holding the run's locals.json");
  audit_cmd->add_option("--mode", mode, "fully_trusted, hbc or hbc_collusion")
      ->check(CLI::IsMember({"fully_trusted", "hbc", "hbc_collusion"}));
  audit_cmd->add_option("--category", audit.category_attr,
                        "payload attribute for group disclosure");
  audit_cmd->add_option("--flag-threshold", audit.flag_threshold,
                        "absolute match-rate delta that flags a category")
      ->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--matrix", matrix, "expectation matrix (JSON)");
  audit_cmd->add_option("--collusion", collusion,
                        "collusion expectations (JSON)");
  audit_cmd->add_option("--out", audit.out_dir, "reports directory");

  fs::path reports_dir;
  std::string report_matrix;
  auto* report_cmd = app.add_subcommand("report", "summarize audit reports");
  report_cmd->add_option("reports", reports_dir, "reports directory")
      ->required();
  report_cmd->add_option("--matrix", report_matrix, "expectation matrix (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*run_cmd) return cmd_run(config, run_out, out);
    if (*audit_cmd) {
      if (audit.locals_dir.empty()) audit.locals_dir = audit.transcript.parent_path();
      if (audit.out_dir.empty()) audit.out_dir = audit.locals_dir / "reports";
      if (!mode.empty()) audit.mode = parse_audit_mode(mode);
      if (!matrix.empty()) audit.matrix = matrix;
      if (!collusion.empty()) audit.collusion = collusion;
      return cmd_audit(audit, out);
    }
    if (*report_cmd) {
      std::optional<fs::path> m;
      if (!report_matrix.empty()) m = report_matrix;
      return cmd_report(reports_dir, out, m);
    }
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const CoverageError& e) {
    err << "coverage error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace linksim
