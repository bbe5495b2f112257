#include "psi/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "psi/presentation.hpp"

namespace psi {

namespace {

struct AnchorEntry {
  std::string_view id;
  std::string_view anchor;
};

// Single source of truth for what each check verifies.
constexpr std::array kAnchors = {
    AnchorEntry{"presentation.audit", "Theorem A: relations R^(i,j) of degree e_i + e_j"},
    AnchorEntry{"theorem_a.lee", "Theorem A; Lee formula"},
    AnchorEntry{"theorem_a.generators", "Theorem A: V^(i) has dimension n-2"},
    AnchorEntry{"theorem_a.relations", "Theorem A: coefficient (n-2)^2-(n-3) at e_i+e_j"},
    AnchorEntry{"theorem_a.n3", "Theorem A: A_3 is a polynomial ring in 3 variables"},
    AnchorEntry{"theorem_a.krull", "Theorem A: Krull dimension 2n-3"},
    AnchorEntry{"hilbert.lee", "Lee formula"},
    AnchorEntry{"hilbert.brute", "Theorem A"},
    AnchorEntry{"bnm.restricted_lee", "relative cartesian power lemma"},
    AnchorEntry{"bnm.conifold", "conifold remark: B_{2,2} is xy=zt"},
    AnchorEntry{"curve_module.factorization", "curve module decomposition"},
    AnchorEntry{"groebner.triple", "Theorem A; Lee formula (standard monomials)"},
    AnchorEntry{"groebner.krull", "Theorem A: Krull dimension"},
    AnchorEntry{"groebner.run", "Theorem A"},
    AnchorEntry{"sample.vanishing", "f_i f_j relation: points of the moduli space satisfy the relations"},
    AnchorEntry{"sample.cij", "c_ij consistency"},
    AnchorEntry{"sample.random_points", "Theorem A: the relation ideal is proper and nonzero"},
    AnchorEntry{"smooth.jacobian_rank", "Theorem B: smooth in codimension <= 4"},
    AnchorEntry{"smooth.singular_locus", "Theorem B: smooth in codimension <= 4"},
    AnchorEntry{"smooth.conifold", "conifold singularity xy=zt"},
    AnchorEntry{"koszul.b2_identity", "Koszulness conjecture: b_2 = dim R"},
    AnchorEntry{"koszul.dual_dims", "Koszulness conjecture"},
    AnchorEntry{"koszul.prediction", "Koszulness conjecture; Lee formula"},
    AnchorEntry{"determinism.threads", "reproducibility contract"},
};

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += '\\';
    out += c;
  }
  return out;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Informative:
      return "informative";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

std::string_view anchor_for(std::string_view check_id) {
  for (const auto& e : kAnchors)
    if (e.id == check_id)
      return e.anchor;
  throw std::logic_error("no anchor registered for check id " + std::string(check_id));
}

Format parse_format(const std::string& s) {
  if (s == "json")
    return Format::Json;
  if (s == "csv")
    return Format::Csv;
  if (s == "md")
    return Format::Markdown;
  throw UsageError("unknown format: " + s + " (json, csv or md)");
}

CheckRecord& Report::add(std::string id, std::string name, Json inputs, Json expected, Json got, Status status) {
  CheckRecord rec;
  rec.anchor = std::string(anchor_for(id));
  rec.id = std::move(id);
  rec.name = std::move(name);
  rec.inputs = std::move(inputs);
  rec.expected = std::move(expected);
  rec.got = std::move(got);
  rec.status = status;
  checks.push_back(std::move(rec));
  return checks.back();
}

Status Report::overall() const {
  bool fail = std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
  return fail ? Status::Fail : Status::Pass;
}

void Report::merge(Report other) {
  for (auto& c : other.checks)
    checks.push_back(std::move(c));
  for (auto& t : other.tables)
    tables.push_back(std::move(t));
  for (auto& [k, v] : other.data.items())
    data[k] = v;
  for (auto& t : other.timings)
    timings.push_back(std::move(t));
}

Json to_json(const Report& r) {
  Json j;
  j["tool"] = "psi";
  j["version"] = std::string(kToolVersion);
  j["title"] = r.title;
  j["config"] = r.config;
  j["overall"] = to_string(r.overall());
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x;
    x["id"] = c.id;
    x["name"] = c.name;
    x["anchor"] = c.anchor;
    x["status"] = to_string(c.status);
    x["inputs"] = c.inputs;
    x["expected"] = c.expected;
    x["got"] = c.got;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  Json tables = Json::object();
  for (const auto& [name, t] : r.tables) {
    Json tj;
    tj["columns"] = t.columns;
    Json rows = Json::array();
    for (const auto& row : t.rows)
      rows.push_back(row);
    tj["rows"] = std::move(rows);
    tables[name] = std::move(tj);
  }
  j["tables"] = std::move(tables);
  j["data"] = r.data;
  if (r.include_timings) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timings)
      t[k] = v;
    j["timings_seconds"] = std::move(t);
  }
  return j;
}

std::string render(const Report& r, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json:
      out << to_json(r).dump(2) << "\n";
      break;
    case Format::Csv: {
      // coefficient tables when present, otherwise the check list
      if (r.tables.empty()) {
        out << "id,name,status,anchor,expected,got\n";
        for (const auto& c : r.checks)
          out << csv_cell(c.id) << "," << csv_cell(c.name) << "," << to_string(c.status) << ","
              << csv_cell(c.anchor) << "," << csv_cell(c.expected) << "," << csv_cell(c.got) << "\n";
      }
      bool first = true;
      for (const auto& [name, t] : r.tables) {
        if (!first)
          out << "\n";
        first = false;
        if (r.tables.size() > 1)
          out << "# " << name << "\n";
        for (std::size_t k = 0; k < t.columns.size(); ++k)
          out << (k ? "," : "") << csv_cell(t.columns[k]);
        out << "\n";
        for (const auto& row : t.rows) {
          for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "," : "") << csv_cell(row[k]);
          out << "\n";
        }
      }
      break;
    }
    case Format::Markdown: {
      out << "# " << (r.title.empty() ? "psi report" : r.title) << "\n\n";
      out << "psi " << kToolVersion << ", overall: **" << to_string(r.overall()) << "**\n\n";
      out << "## Configuration\n\n";
      for (auto& [k, v] : r.config.items())
        out << "- " << k << ": " << md_cell(v) << "\n";
      out << "\n## Checks\n\n| status | check | anchor | expected | got |\n|---|---|---|---|---|\n";
      for (const auto& c : r.checks)
        out << "| " << to_string(c.status) << " | " << md_cell(c.name) << " | " << md_cell(c.anchor) << " | "
            << md_cell(c.expected) << " | " << md_cell(c.got) << " |\n";
      for (const auto& [name, t] : r.tables) {
        out << "\n## " << name << "\n\n|";
        for (const auto& col : t.columns)
          out << " " << col << " |";
        out << "\n|";
        for (std::size_t k = 0; k < t.columns.size(); ++k)
          out << "---|";
        out << "\n";
        for (const auto& row : t.rows) {
          out << "|";
          for (const auto& v : row)
            out << " " << md_cell(v) << " |";
          out << "\n";
        }
      }
      if (!r.data.empty())
        out << "\n## Data\n\n```json\n" << r.data.dump(2) << "\n```\n";
      if (r.include_timings && !r.timings.empty()) {
        out << "\n## Timings\n\n";
        for (const auto& [k, v] : r.timings)
          out << "- " << k << ": " << format_seconds(v) << " s\n";
      }
      break;
    }
  }
  return out.str();
}

int exit_code(const Report& r) { return r.overall() == Status::Fail ? 1 : 0; }

}  // namespace psi
