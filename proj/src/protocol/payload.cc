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

#include "linksim/protocol/payload.h"

#include <array>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "linksim/errors.h"
#include "linksim/model/csv.h"

namespace linksim {

using nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<PayloadKind, std::string_view>, 7> kKindNames{{
    {PayloadKind::kIdQidList, "IdQidList"},
    {PayloadKind::kMatchBackflow, "MatchBackflow"},
    {PayloadKind::kPdWithMid, "PdWithMid"},
    {PayloadKind::kPdWithId, "PdWithId"},
    {PayloadKind::kMatchIdPairs, "MatchIdPairs"},
    {PayloadKind::kSufFile, "SufFile"},
    {PayloadKind::kPufFile, "PufFile"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ordered_json pairs_json(
    const std::vector<std::pair<std::string, std::string>>& entries,
    const char* first, const char* second) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : entries) {
    ordered_json e;
    e[first] = a;
    e[second] = b;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(
    const ordered_json& arr, const char* first, const char* second) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : arr) {
    out.emplace_back(e.at(first).get<std::string>(),
                     e.at(second).get<std::string>());
  }
  return out;
}

ordered_json rows_json(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
    const char* key, const char* values) {
  ordered_json arr = ordered_json::array();
  for (const auto& [k, v] : rows) {
    ordered_json e;
    e[key] = k;
    e[values] = v;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<std::pair<std::string, std::vector<std::string>>> rows_from_json(
    const ordered_json& arr, const char* key, const char* values) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& e : arr) {
    out.emplace_back(e.at(key).get<std::string>(),
                     e.at(values).get<std::vector<std::string>>());
  }
  return out;
}

}  // namespace

std::string_view to_string(PayloadKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

PayloadKind parse_payload_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw ParseError(fmt::format("unknown payload kind \"{}\"", text));
}

std::vector<std::string> Suf::header() const {
  std::vector<std::string> h{"MatchId"};
  for (const auto& c : left_columns) h.push_back("A." + c);
  for (const auto& c : right_columns) h.push_back("B." + c);
  return h;
}

PayloadKind kind_of(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const PlainQidList&) { return PayloadKind::kIdQidList; },
          [](const EncodedQidList&) { return PayloadKind::kIdQidList; },
          [](const MatchBackflow&) { return PayloadKind::kMatchBackflow; },
          [](const PdWithMid&) { return PayloadKind::kPdWithMid; },
          [](const PdWithId&) { return PayloadKind::kPdWithId; },
          [](const MatchIdPairs&) { return PayloadKind::kMatchIdPairs; },
          [](const SufFile&) { return PayloadKind::kSufFile; },
          [](const PufFile&) { return PayloadKind::kPufFile; },
      },
      payload);
}

std::size_t entry_count(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const SufFile& s) { return s.suf.rows.size(); },
          [](const PufFile& p) { return p.puf.rows.size(); },
          [](const auto& p) { return p.entries.size(); },
      },
      payload);
}

ordered_json payload_to_json(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const PlainQidList& p) {
            ordered_json j;
            j["mode"] = "tdl";
            j["qid_names"] = p.qid_names;
            j["entries"] = rows_json(p.entries, "id", "qid");
            return j;
          },
          [](const EncodedQidList& p) {
            ordered_json j;
            j["mode"] = "pprl";
            j["params"] = p.params_fingerprint;
            ordered_json arr = ordered_json::array();
            for (const auto& [eid, filter] : p.entries) {
              ordered_json e;
              e["eid"] = eid;
              e["eqid"] = filter.to_hex();
              arr.push_back(std::move(e));
            }
            j["entries"] = std::move(arr);
            return j;
          },
          [](const MatchBackflow& p) {
            ordered_json j;
            j["entries"] = pairs_json(p.entries, "id", "mid");
            return j;
          },
          [](const PdWithMid& p) {
            ordered_json j;
            j["columns"] = p.columns;
            j["entries"] = rows_json(p.entries, "mid", "pd");
            return j;
          },
          [](const PdWithId& p) {
            ordered_json j;
            j["columns"] = p.columns;
            j["entries"] = rows_json(p.entries, "id", "pd");
            return j;
          },
          [](const MatchIdPairs& p) {
            ordered_json j;
            j["entries"] = pairs_json(p.entries, "left", "right");
            return j;
          },
          [](const SufFile& p) {
            ordered_json j;
            j["left_columns"] = p.suf.left_columns;
            j["right_columns"] = p.suf.right_columns;
            ordered_json rows = ordered_json::array();
            for (const auto& r : p.suf.rows) {
              ordered_json e;
              e["mid"] = r.match_id;
              e["left"] = r.pd_left;
              e["right"] = r.pd_right;
              rows.push_back(std::move(e));
            }
            j["rows"] = std::move(rows);
            return j;
          },
          [](const PufFile& p) {
            ordered_json j;
            j["columns"] = p.puf.columns;
            j["rows"] = p.puf.rows;
            return j;
          },
      },
      payload);
}

Payload payload_from_json(PayloadKind kind, const ordered_json& j) {
  try {
    switch (kind) {
      case PayloadKind::kIdQidList: {
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "tdl") {
          return PlainQidList{j.at("qid_names").get<std::vector<std::string>>(),
                              rows_from_json(j.at("entries"), "id", "qid")};
        }
        if (mode != "pprl") throw ParseError("IdQidList has unknown mode");
        EncodedQidList p;
        p.params_fingerprint = j.at("params").get<std::string>();
        for (const auto& e : j.at("entries")) {
          p.entries.emplace_back(
              e.at("eid").get<std::string>(),
              BloomFilter::from_hex(e.at("eqid").get<std::string>(),
                                    p.params_fingerprint));
        }
        return p;
      }
      case PayloadKind::kMatchBackflow:
        return MatchBackflow{pairs_from_json(j.at("entries"), "id", "mid")};
      case PayloadKind::kPdWithMid:
        return PdWithMid{j.at("columns").get<std::vector<std::string>>(),
                         rows_from_json(j.at("entries"), "mid", "pd")};
      case PayloadKind::kPdWithId:
        return PdWithId{j.at("columns").get<std::vector<std::string>>(),
                        rows_from_json(j.at("entries"), "id", "pd")};
      case PayloadKind::kMatchIdPairs:
        return MatchIdPairs{pairs_from_json(j.at("entries"), "left", "right")};
      case PayloadKind::kSufFile: {
        SufFile f;
        f.suf.left_columns = j.at("left_columns").get<std::vector<std::string>>();
        f.suf.right_columns =
            j.at("right_columns").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
          f.suf.rows.push_back({r.at("mid").get<std::string>(),
                                r.at("left").get<std::vector<std::string>>(),
                                r.at("right").get<std::vector<std::string>>()});
        }
        return f;
      }
      case PayloadKind::kPufFile:
        return PufFile{
            Puf{j.at("columns").get<std::vector<std::string>>(),
                j.at("rows").get<std::vector<std::vector<std::string>>>()}};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{} payload: {}", to_string(kind), e.what()));
  }
  throw ParseError("unhandled payload kind");
}

void write_suf_csv(const Suf& suf, std::ostream& out) {
  csv::write_row(out, suf.header());
  for (const auto& r : suf.rows) {
    csv::Row row{r.match_id};
    row.insert(row.end(), r.pd_left.begin(), r.pd_left.end());
    row.insert(row.end(), r.pd_right.begin(), r.pd_right.end());
    csv::write_row(out, row);
  }
}

void write_puf_csv(const Puf& puf, std::ostream& out) {
  csv::write_row(out, puf.columns);
  for (const auto& r : puf.rows) csv::write_row(out, r);
}

Suf read_suf_csv(std::istream& in) {
  const auto rows = csv::read(in);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "MatchId") {
    throw ParseError("SUF header must start with MatchId", 1);
  }
  Suf suf;
  for (std::size_t i = 1; i < rows[0].size(); ++i) {
    const std::string& h = rows[0][i];
    if (h.rfind("A.", 0) == 0) {
      suf.left_columns.push_back(h.substr(2));
    } else if (h.rfind("B.", 0) == 0) {
      suf.right_columns.push_back(h.substr(2));
    } else {
      throw ParseError(fmt::format("SUF column \"{}\" lacks A./B. prefix", h), 1);
    }
  }
  const std::size_t nl = suf.left_columns.size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw ParseError("SUF row width differs from header", r + 1);
    }
    suf.rows.push_back(
        {rows[r][0],
         {rows[r].begin() + 1, rows[r].begin() + 1 + static_cast<long>(nl)},
         {rows[r].begin() + 1 + static_cast<long>(nl), rows[r].end()}});
  }
  return suf;
}

}  // namespace linksim
