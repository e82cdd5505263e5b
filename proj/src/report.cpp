#include "xprod/report.hpp"

#include "xprod/error.hpp"

#include <iomanip>
#include <sstream>

namespace xprod {

using nlohmann::json;

const char* to_string(Status s)
{
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Skipped: return "skipped-hypothesis";
  }
  return "?";
}

Status status_from_string(const std::string& s)
{
  if (s == "pass")
    return Status::Pass;
  if (s == "fail")
    return Status::Fail;
  if (s == "skipped-hypothesis")
    return Status::Skipped;
  throw Error(ErrorKind::InvalidConfig, "unknown status '" + s + "'");
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const
{
  std::size_t n = 0;
  for (const auto& c : checks)
    n += c.status == s;
  return n;
}

json to_json(const Report& r, bool timings)
{
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"check_id", c.check_id},
              {"theorem_anchor", c.theorem_anchor},
              {"fixture_id", c.fixture_id},
              {"status", to_string(c.status)},
              {"max_error", c.max_error},
              {"bound_slack", c.bound_slack ? json(*c.bound_slack) : json(nullptr)},
              {"criterion", c.criterion}};
    if (!c.direction.empty())
      j["direction"] = c.direction;
    if (!c.detail.empty())
      j["detail"] = c.detail;
    if (!c.reproducer.is_null())
      j["reproducer"] = c.reproducer;
    if (timings)
      j["elapsed"] = c.elapsed;
    checks.push_back(j);
  }
  return {{"suite", r.suite},
          {"seed", r.seed},
          {"fixtures", r.fixtures},
          {"passed", r.passed()},
          {"counts",
           {{"pass", r.count(Status::Pass)},
            {"fail", r.count(Status::Fail)},
            {"skipped-hypothesis", r.count(Status::Skipped)}}},
          {"checks", checks},
          {"theorems", theorem_records(r)}};
}

Report report_from_json(const json& j)
{
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.fixtures = j.value("fixtures", std::vector<std::string>{});
  for (const auto& c : j.at("checks")) {
    CheckRecord x;
    x.check_id = c.at("check_id").get<std::string>();
    x.theorem_anchor = c.at("theorem_anchor").get<std::string>();
    x.fixture_id = c.at("fixture_id").get<std::string>();
    x.status = status_from_string(c.at("status").get<std::string>());
    x.max_error = c.at("max_error").get<double>();
    if (!c.at("bound_slack").is_null())
      x.bound_slack = c.at("bound_slack").get<double>();
    x.criterion = c.at("criterion").get<int>();
    x.direction = c.value("direction", "");
    x.detail = c.value("detail", "");
    x.elapsed = c.value("elapsed", 0.0);
    if (c.contains("reproducer"))
      x.reproducer = c.at("reproducer");
    r.checks.push_back(std::move(x));
  }
  return r;
}

std::string to_text(const Report& r, bool timings)
{
  std::ostringstream os;
  os << "suite " << r.suite << "  seed " << r.seed << "\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(20) << to_string(c.status) << std::setw(30) << c.check_id << std::setw(6)
       << c.fixture_id << " err " << std::scientific << std::setprecision(2) << c.max_error;
    if (c.bound_slack)
      os << "  slack " << *c.bound_slack;
    if (timings)
      os << "  " << std::fixed << std::setprecision(3) << c.elapsed << "s";
    os << std::defaultfloat;
    if (!c.detail.empty())
      os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Skipped)
     << " skipped\n";
  return os.str();
}

json theorem_records(const Report& r)
{
  json out = json::array();
  for (const auto& c : r.checks) {
    if (c.direction.empty())
      continue;
    out.push_back({{"theorem_id", c.theorem_anchor},
                   {"fixture", c.fixture_id},
                   {"direction", c.direction},
                   {"max_abs_error", c.max_error},
                   {"bound_slack", c.bound_slack ? json(*c.bound_slack) : json(nullptr)},
                   {"pass", c.status != Status::Fail}});
  }
  return out;
}

} // namespace xprod
