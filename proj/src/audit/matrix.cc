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

#include "linksim/audit/matrix.h"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "linksim/errors.h"

namespace linksim {

namespace {

constexpr Role kRoles[] = {Role::kDataOwner, Role::kLinkageUnit,
                           Role::kDataMerger};

bool plays(PartyId party, Role role) {
  auto roles = roles_of(party);
  return std::find(roles.begin(), roles.end(), role) != roles.end();
}

std::string join_kinds(const FactKindSet& kinds) {
  if (kinds.empty()) return "---";
  std::string out;
  for (FactKind k : kinds) {
    if (!out.empty()) out += ", ";
    out += to_string(k);
  }
  return out;
}

nlohmann::ordered_json kinds_json(const FactKindSet& kinds) {
  auto arr = nlohmann::ordered_json::array();
  for (FactKind k : kinds) arr.push_back(std::string(to_string(k)));
  return arr;
}

}  // namespace

bool MatrixSummary::ok() const { return as_expected() == cells.size(); }

std::size_t MatrixSummary::as_expected() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const MatrixCell& c) {
        return c.status == "as_expected";
      }));
}

std::string MatrixSummary::to_text() const {
  std::vector<std::string> variants;
  for (const auto& c : cells) {
    const std::string v = to_string(c.variant);
    if (std::find(variants.begin(), variants.end(), v) == variants.end()) {
      variants.push_back(v);
    }
  }
  auto cell_at = [&](const std::string& v, Role r) -> const MatrixCell* {
    for (const auto& c : cells) {
      if (to_string(c.variant) == v && c.role == r) return &c;
    }
    return nullptr;
  };
  auto table = [&](auto&& text_of) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"role"});
    for (const auto& v : variants) rows.back().push_back(v);
    for (Role r : kRoles) {
      rows.push_back({std::string(to_string(r))});
      for (const auto& v : variants) {
        const MatrixCell* c = cell_at(v, r);
        rows.back().push_back(c ? text_of(*c) : std::string("?"));
      }
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    std::string out;
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += fmt::format("{:<{}}", row[i], width[i]);
        if (i + 1 < row.size()) line += " | ";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    return out;
  };

  std::string out = "Observed fact kinds\n";
  out += table([](const MatrixCell& c) { return join_kinds(c.actual); });
  out += "\nVerdicts\n";
  out += table([](const MatrixCell& c) { return c.status; });
  out += "\n";
  for (const auto& c : cells) {
    if (c.status == "as_expected") continue;
    out += fmt::format("{} {}: {}", to_string(c.variant), to_string(c.role),
                       c.status);
    if (!c.extra.empty()) out += fmt::format("; extra: {}", join_kinds(c.extra));
    if (!c.missing.empty()) {
      out += fmt::format("; missing: {}", join_kinds(c.missing));
    }
    out += "\n";
  }
  out += fmt::format("{}/{} cells as expected\n", as_expected(), cells.size());
  return out;
}

nlohmann::ordered_json MatrixSummary::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(c.variant);
    j["role"] = std::string(to_string(c.role));
    j["status"] = c.status;
    j["actual"] = kinds_json(c.actual);
    j["expected"] = kinds_json(c.expected);
    j["extra"] = kinds_json(c.extra);
    j["missing"] = kinds_json(c.missing);
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["cells"] = std::move(arr);
  j["as_expected"] = as_expected();
  j["total"] = cells.size();
  j["ok"] = ok();
  return j;
}

MatrixSummary verify_matrix(const std::vector<LeakageReport>& reports,
                            const ExpectationMatrix& matrix,
                            const std::vector<ProtocolVariant>& variants) {
  MatrixSummary summary;
  for (ProtocolVariant v : variants) {
    for (Role role : kRoles) {
      std::vector<const LeakageReport*> judged;
      for (const auto& r : reports) {
        if (r.variant == v && r.parties.size() == 1 && plays(r.parties[0], role)) {
          judged.push_back(&r);
        }
      }
      const std::size_t needed = role == Role::kDataOwner ? 2 : 1;
      if (judged.size() < needed) {
        throw CoverageError(fmt::format("no report covers the {} cell of {}",
                                        to_string(role), to_string(v)));
      }

      MatrixCell cell;
      cell.variant = v;
      cell.role = role;
      for (const auto* r : judged) {
        for (const auto& f : r->facts) cell.actual.insert(f.kind);
      }
      const FactKindSet* expected = matrix.find(v, role);
      if (!expected) {
        cell.status = "no_expectation";
        summary.cells.push_back(std::move(cell));
        continue;
      }
      cell.expected = *expected;
      const bool merged = judged.front()->parties[0] == PartyId::kLuDm;
      if (merged) {
        // A merged party is judged against both rows at once; take its own
        // verdict and restrict the kinds shown to this row.
        const LeakageReport& r = *judged.front();
        FactKindSet shown;
        std::set_intersection(cell.actual.begin(), cell.actual.end(),
                              expected->begin(), expected->end(),
                              std::inserter(shown, shown.end()));
        cell.actual = shown;
        cell.extra = r.verdict.extra;
        cell.missing = r.verdict.missing;
        cell.status = r.verdict.status == VerdictStatus::kAsExpected
                          ? "as_expected"
                          : "deviates";
      } else {
        // Each owner is compared on its own, so one owner's extra cannot be
        // masked by the other's.
        for (const auto* r : judged) {
          const FactKindSet own = kinds_of(r->facts);
          std::set_difference(own.begin(), own.end(), expected->begin(),
                              expected->end(),
                              std::inserter(cell.extra, cell.extra.end()));
          std::set_difference(expected->begin(), expected->end(), own.begin(),
                              own.end(),
                              std::inserter(cell.missing, cell.missing.end()));
        }
        cell.status = cell.extra.empty() && cell.missing.empty()
                          ? "as_expected"
                          : "deviates";
      }
      summary.cells.push_back(std::move(cell));
    }
  }
  return summary;
}

}  // namespace linksim
