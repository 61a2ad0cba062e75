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

#include "linksim/model/schema.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "linksim/errors.h"

namespace linksim {

Schema::Schema(std::vector<QidAttribute> qid_attrs,
               std::vector<std::string> pd_attrs,
               std::vector<DerivedRule> derived)
    : qid_attrs_(std::move(qid_attrs)),
      pd_attrs_(std::move(pd_attrs)),
      derived_(std::move(derived)) {
  std::set<std::string> names{"id"};
  auto claim = [&names](const std::string& name) {
    if (name.empty()) throw ContractError("empty attribute name in schema");
    if (!names.insert(name).second) {
      throw ContractError(fmt::format("duplicate attribute name \"{}\"", name));
    }
  };
  double total = 0.0;
  for (const auto& a : qid_attrs_) {
    claim(a.name);
    if (!(a.weight >= 0.0 && a.weight <= 1.0)) {
      throw ContractError(
          fmt::format("weight of \"{}\" outside [0, 1]", a.name));
    }
    total += a.weight;
  }
  if (!qid_attrs_.empty() && std::abs(total - 1.0) > 1e-9) {
    throw ContractError(
        fmt::format("QID weights sum to {}, expected 1.0", total));
  }
  for (const auto& p : pd_attrs_) claim(p);
  for (const auto& rule : derived_) {
    if (!qid_index(rule.source_attr) && !pd_index(rule.source_attr)) {
      throw ContractError(fmt::format("derived rule reads unknown column \"{}\"",
                                      rule.source_attr));
    }
    claim(rule.target_attr);
  }
}

std::vector<std::string> Schema::qid_names() const {
  std::vector<std::string> out;
  for (const auto& a : qid_attrs_) out.push_back(a.name);
  return out;
}

std::vector<std::string> Schema::pd_columns() const {
  std::vector<std::string> out = pd_attrs_;
  for (const auto& rule : derived_) out.push_back(rule.target_attr);
  return out;
}

std::optional<std::size_t> Schema::qid_index(const std::string& name) const {
  for (std::size_t i = 0; i < qid_attrs_.size(); ++i) {
    if (qid_attrs_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Schema::pd_index(const std::string& name) const {
  const auto cols = pd_columns();
  auto it = std::find(cols.begin(), cols.end(), name);
  if (it == cols.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cols.begin());
}

namespace {

DerivedKind parse_kind(const std::string& text) {
  if (text == "age_from_dob") return DerivedKind::kAgeFromDob;
  throw ConfigError(fmt::format("unknown derived rule kind \"{}\"", text));
}

}  // namespace

Schema parse_schema(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ParseError(fmt::format("schema: {}", e.what()), e.mark.line + 1);
  }
  try {
    std::vector<QidAttribute> qid;
    for (const auto& node : root["qid"]) {
      qid.push_back({node["name"].as<std::string>(), node["weight"].as<double>()});
    }
    std::vector<std::string> pd;
    if (root["pd"]) pd = root["pd"].as<std::vector<std::string>>();
    std::vector<DerivedRule> derived;
    for (const auto& node : root["derived"]) {
      DerivedRule rule;
      rule.source_attr = node["source"].as<std::string>();
      rule.target_attr = node["target"].as<std::string>();
      rule.kind = parse_kind(node["kind"].as<std::string>("age_from_dob"));
      rule.reference_year = node["reference_year"].as<int>(2025);
      derived.push_back(std::move(rule));
    }
    return Schema(std::move(qid), std::move(pd), std::move(derived));
  } catch (const YAML::Exception& e) {
    throw ConfigError(fmt::format("schema: {}", e.what()));
  } catch (const ContractError& e) {
    throw ConfigError(fmt::format("schema: {}", e.what()));
  }
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open schema {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_schema(buf.str());
}

std::string schema_to_yaml(const Schema& schema) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "qid" << YAML::Value << YAML::BeginSeq;
  for (const auto& a : schema.qid_attrs()) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value
        << a.name << YAML::Key << "weight" << YAML::Value << a.weight
        << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "pd" << YAML::Value << YAML::Flow << schema.pd_attrs();
  out << YAML::Key << "derived" << YAML::Value << YAML::BeginSeq;
  for (const auto& rule : schema.derived()) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "source" << YAML::Value
        << rule.source_attr << YAML::Key << "target" << YAML::Value
        << rule.target_attr << YAML::Key << "kind" << YAML::Value
        << "age_from_dob" << YAML::Key << "reference_year" << YAML::Value
        << rule.reference_year << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

Schema synthetic_schema() {
  return Schema({{"FirstN", 0.3}, {"LastN", 0.3}, {"City", 0.2}, {"DoB", 0.2}},
                {"Occupation", "Income", "Score"},
                {{"DoB", "Age", DerivedKind::kAgeFromDob, 2025}});
}

}  // namespace linksim
