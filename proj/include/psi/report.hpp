#ifndef PSI_REPORT_HPP
#define PSI_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace psi {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Informative, Skipped };
std::string to_string(Status s);

/// The statement each check id is anchored to. Unknown ids throw
/// std::logic_error, so every record is forced through this table.
std::string_view anchor_for(std::string_view check_id);

struct CheckRecord {
  std::string id;
  std::string name;
  Json inputs = Json::object();
  Json expected;
  Json got;
  Status status = Status::Pass;
  std::string anchor;
};

/// Rows are kept in insertion order; producers insert them sorted by
/// (total degree, lexicographic degree vector).
struct CoefficientTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& s);

struct Report {
  std::string title;
  Json config = Json::object();
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, CoefficientTable>> tables;
  Json data = Json::object();  // subcommand-specific payload
  bool include_timings = false;
  std::vector<std::pair<std::string, double>> timings;

  /// Fills in the anchor from the table and appends.
  CheckRecord& add(std::string id, std::string name, Json inputs, Json expected, Json got, Status status);

  /// fail iff any record failed; informative records do not fail a run.
  Status overall() const;
  void merge(Report other);
};

std::string render(const Report& r, Format f);
Json to_json(const Report& r);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const Report& r);

}  // namespace psi

#endif  // PSI_REPORT_HPP
