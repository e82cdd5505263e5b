#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xprod {

enum class Status { Pass, Fail, Skipped };

// "pass", "fail", "skipped-hypothesis"
const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckRecord {
  std::string check_id;
  std::string theorem_anchor;
  std::string fixture_id;
  Status status = Status::Pass;
  double max_error = 0.0;              // largest observed deviation in an identity
  std::optional<double> bound_slack;   // smallest rhs - lhs over the inequalities checked
  double elapsed = 0.0;                // seconds
  int criterion = 0;                   // acceptance criterion, 0 for supporting checks
  std::string direction;               // for correspondences: "pair->rep", "rep->pair", "both"
  std::string detail;
  nlohmann::json reproducer;           // worst input seen, set on failure
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::string> fixtures;
  std::vector<CheckRecord> checks; // sorted by (check_id, fixture_id)

  bool passed() const;
  std::size_t count(Status s) const;
};

// Timings are left out unless asked for, so reruns with the same seed are byte-identical.
nlohmann::json to_json(const Report& r, bool timings = false);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r, bool timings = false);

// One record per correspondence check:
// {theorem_id, fixture, direction, max_abs_error, bound_slack, pass}
nlohmann::json theorem_records(const Report& r);

} // namespace xprod
