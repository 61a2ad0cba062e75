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

#include "linksim/cli/run_config.h"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

void reject_unknown(const YAML::Node& map, const std::set<std::string>& known,
                    std::string_view where) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!known.count(key)) {
      throw ConfigError(fmt::format("unknown key \"{}\" in {}", key, where));
    }
  }
}

template <typename T>
T get(const YAML::Node& map, const char* key, T fallback) {
  const YAML::Node n = map[key];
  if (!n || n.IsNull()) return fallback;
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(fmt::format("\"{}\" has the wrong type", key));
  }
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

DbSource db_source(const YAML::Node& node, const char* key,
                   const std::filesystem::path& base, std::string label) {
  const YAML::Node n = node[key];
  if (!n || !n.IsMap()) {
    throw ConfigError(fmt::format("\"{}\" must be a map with a path", key));
  }
  reject_unknown(n, {"path", "label", "context"}, key);
  DbSource s;
  const auto path = get<std::string>(n, "path", "");
  if (path.empty()) throw ConfigError(fmt::format("\"{}.path\" is required", key));
  s.path = resolve(base, path);
  s.label = get<std::string>(n, "label", std::move(label));
  s.context = get<std::string>(n, "context", "");
  return s;
}

SdcRule::Op parse_op(const std::string& op) {
  if (op == "drop") return SdcRule::Op::kDrop;
  if (op == "round") return SdcRule::Op::kRound;
  if (op == "top_code") return SdcRule::Op::kTopCode;
  throw ConfigError(fmt::format("unknown sdc op \"{}\"", op));
}

RunConfig parse(const YAML::Node& root, const std::filesystem::path& base) {
  if (!root.IsMap()) throw ConfigError("run config must be a YAML map");
  reject_unknown(root,
                 {"variant", "threshold", "project", "blocking", "merge_lu_dm",
                  "encoding", "key", "seed", "schema", "db_a", "db_b", "sdc",
                  "audit"},
                 "run config");
  RunConfig c;
  const auto variant = get<std::string>(root, "variant", "");
  if (variant.empty()) throw ConfigError("\"variant\" is required");
  try {
    c.variant = parse_variant(variant);
    c.blocking = parse_blocking(get<std::string>(root, "blocking", "none"));
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  c.threshold = get<double>(root, "threshold", c.threshold);
  c.project = get<std::string>(root, "project", c.project);
  c.merge_lu_dm = get<bool>(root, "merge_lu_dm", false);
  c.seed = get<std::uint64_t>(root, "seed", 0);

  if (const YAML::Node e = root["encoding"]) {
    if (c.variant.mode != Mode::kPprl) {
      throw ConfigError("encoding parameters only apply to PPRL variants");
    }
    reject_unknown(e, {"length", "num_hashes", "q", "pad"}, "encoding");
    c.encoding.length = get<std::size_t>(e, "length", c.encoding.length);
    c.encoding.num_hashes = get<std::size_t>(e, "num_hashes", c.encoding.num_hashes);
    c.encoding.q = get<std::size_t>(e, "q", c.encoding.q);
    c.encoding.pad = get<bool>(e, "pad", c.encoding.pad);
    try {
      c.encoding.validate();
    } catch (const Error& err) {
      throw ConfigError(err.what());
    }
  }

  if (const YAML::Node k = root["key"]) {
    if (!k.IsMap()) throw ConfigError("\"key\" must be {file: ...} or {seed: true}");
    reject_unknown(k, {"file", "seed"}, "key");
    if (k["file"] && k["seed"]) {
      throw ConfigError("\"key\" names both a file and the seed");
    }
    if (k["file"]) {
      c.key_source = KeySource::kFile;
      c.key_file = resolve(base, get<std::string>(k, "file", ""));
    } else if (get<bool>(k, "seed", false)) {
      c.key_source = KeySource::kSeed;
    }
  }
  if (c.variant.mode == Mode::kPprl && c.key_source == KeySource::kNone) {
    throw ConfigError("PPRL runs need a secret key source");
  }
  if (c.variant.mode == Mode::kTdl && c.key_source != KeySource::kNone) {
    throw ConfigError("TDL runs must not be given a secret key");
  }

  const auto schema = get<std::string>(root, "schema", "synthetic");
  if (schema != "synthetic") c.schema_path = resolve(base, schema);
  c.db_a = db_source(root, "db_a", base, "A");
  c.db_b = db_source(root, "db_b", base, "B");
  if (c.db_a.label == c.db_b.label) {
    throw ConfigError("the two databases need distinct labels");
  }

  if (const YAML::Node s = root["sdc"]) {
    reject_unknown(s, {"k", "rules"}, "sdc");
    c.sdc.k = get<std::size_t>(s, "k", 1);
    if (const YAML::Node rules = s["rules"]) {
      for (const auto& r : rules) {
        reject_unknown(r, {"column", "op", "value"}, "sdc rule");
        SdcRule rule;
        rule.column = get<std::string>(r, "column", "");
        rule.op = parse_op(get<std::string>(r, "op", ""));
        rule.value = get<double>(r, "value", 0.0);
        c.sdc.rules.push_back(std::move(rule));
      }
    }
  }

  if (const YAML::Node a = root["audit"]) {
    reject_unknown(a, {"mode", "category_attr", "flag_threshold"}, "audit");
    try {
      c.audit_mode = parse_audit_mode(get<std::string>(a, "mode", "hbc"));
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    }
    if (a["category_attr"]) c.category_attr = get<std::string>(a, "category_attr", "");
    c.flag_threshold = get<double>(a, "flag_threshold", c.flag_threshold);
    if (!(c.flag_threshold >= 0.0)) {
      throw ConfigError("audit.flag_threshold must be non-negative");
    }
  }
  return c;
}

}  // namespace

Schema RunConfig::schema() const {
  return schema_path ? load_schema(*schema_path) : synthetic_schema();
}

std::optional<SecretKey> RunConfig::key() const {
  switch (key_source) {
    case KeySource::kNone: return std::nullopt;
    case KeySource::kSeed: return SecretKey::derive_from_seed(seed);
    case KeySource::kFile: {
      std::ifstream in(key_file);
      if (!in) {
        throw ConfigError(fmt::format("cannot read key file {}", key_file.string()));
      }
      std::string hex;
      in >> hex;
      try {
        return SecretKey::from_hex(hex);
      } catch (const Error& e) {
        throw ConfigError(fmt::format("key file {}: {}", key_file.string(), e.what()));
      }
    }
  }
  return std::nullopt;
}

RunParams RunConfig::params() const {
  RunParams p;
  p.threshold = threshold;
  p.blocking = blocking;
  p.project = project;
  if (variant.mode == Mode::kPprl) p.encoding = encoding;
  p.key = key();
  p.merge_lu_dm = merge_lu_dm;
  p.sdc = sdc;
  p.context_a = db_a.context;
  p.context_b = db_b.context;
  return p;
}

RunConfig parse_run_config(const std::string& yaml_text,
                           const std::filesystem::path& base_dir) {
  try {
    return parse(YAML::Load(yaml_text), base_dir);
  } catch (const YAML::Exception& e) {
    throw ConfigError(fmt::format("run config: {}", e.what()));
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open {}", path.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path.parent_path());
}

}  // namespace linksim
