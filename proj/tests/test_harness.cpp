#include "xprod/config.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"
#include "xprod/report.hpp"
#include "xprod/suite.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace xprod;
using nlohmann::json;

namespace {

ErrorKind config_error(const json& j)
{
  try {
    config_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted " << j.dump();
  return ErrorKind::NoIdentity;
}

} // namespace

TEST(Config, BuiltinsByDefault)
{
  Config cfg = config_from_json(json::object());
  ASSERT_EQ(cfg.fixtures.size(), 5u);
  EXPECT_EQ(cfg.suite, "all");
  EXPECT_EQ(cfg.fixtures[2].id, "F3");
}

TEST(Config, CustomFixture)
{
  json j = json::parse(R"({
    "suite": "core",
    "seed": 5,
    "fixtures": [{
      "id": "Z3",
      "group": "Z_3",
      "algebra": "scalars",
      "action": "trivial",
      "weight": [1, 2, 2],
      "characters": [[1, 1, 1]],
      "classes": [{"induced": true}, {"covariant_line": 1, "character": 0}]
    }]
  })");
  Config cfg = config_from_json(j);
  ASSERT_EQ(cfg.fixtures.size(), 1u);
  EXPECT_EQ(cfg.fixtures[0].sys.order(), 3u);
  EXPECT_EQ(cfg.fixtures[0].r.size(), 2u);
  EXPECT_EQ(cfg.seed, 5u);
  Report r = run_suite(cfg);
  EXPECT_TRUE(r.passed()) << to_text(r);
}

TEST(Config, Errors)
{
  EXPECT_EQ(config_error({{"fixtures", {"F9"}}}), ErrorKind::InvalidConfig);
  EXPECT_EQ(config_error({{"suite", "nope"}}), ErrorKind::InvalidConfig);
  json bad_weight = {{"fixtures", {{{"id", "x"}, {"group", "Z_2"}, {"algebra", "scalars"}, {"weight", {1, 0.5}}}}}};
  EXPECT_EQ(config_error(bad_weight), ErrorKind::NotSubmultiplicative);
  json short_weight = {{"fixtures", {{{"id", "x"}, {"group", "Z_2"}, {"algebra", "scalars"}, {"weight", {1}}}}}};
  EXPECT_EQ(config_error(short_weight), ErrorKind::DimensionMismatch);
  json bad_table = {{"fixtures", {{{"id", "x"}, {"group", {{"table", {{0, 1}, {1}}}}}, {"algebra", "scalars"}}}}};
  EXPECT_EQ(config_error(bad_table), ErrorKind::DimensionMismatch);
}

TEST(Config, ErrorsNameTheLocation)
{
  json bad_table = {{"fixtures", {{{"id", "x"}, {"group", {{"table", {{0, 1}, {1}}}}}, {"algebra", "scalars"}}}}};
  try {
    config_from_json(bad_table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "DimensionMismatch: fixtures[0] (x): group: row 1 has wrong length");
  }
}

TEST(Report, JsonRoundTrip)
{
  Report r = run_suite({builtin_fixture("F1"), builtin_fixture("F4")}, "all", 99);
  for (bool timings : {false, true}) {
    json a = to_json(r, timings);
    Report back = report_from_json(a);
    EXPECT_EQ(to_json(back, timings).dump(), a.dump());
  }
  Report back = report_from_json(to_json(r, true));
  EXPECT_EQ(back.checks.size(), r.checks.size());
}

TEST(Report, DeterministicGivenSeed)
{
  std::vector<Fixture> fx = {builtin_fixture("F2")};
  EXPECT_EQ(to_json(run_suite(fx, "all", 7)).dump(), to_json(run_suite(fx, "all", 7)).dump());
}

TEST(Report, EmptySuiteIsValidJson)
{
  json j = to_json(run_suite({}, "all", 1));
  EXPECT_TRUE(j.at("checks").is_array());
  EXPECT_TRUE(j.at("checks").empty());
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(Report, FailureCarriesReproducer)
{
  // zero tolerance turns rounding error in the S3 convolution into a failure
  Report r = run_suite({builtin_fixture("F3")}, "core", 1, Tolerances{0.0, 0.0, 0.0});
  bool found = false;
  for (const auto& c : r.checks)
    if (c.check_id == "convolution-associativity") {
      ASSERT_EQ(c.status, Status::Fail);
      ASSERT_TRUE(c.reproducer.contains("f"));
      AFunction f = afunction_from_json(c.reproducer.at("f"), 6, 4);
      EXPECT_EQ(f.order(), 6u);
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_FALSE(r.passed());
}

TEST(Suite, UnknownSuiteRejected)
{
  EXPECT_THROW(run_suite({builtin_fixture("F1")}, "nope", 1), Error);
}

TEST(Suite, CoreOnZ2ScalarsPasses)
{
  Report r = run_suite({builtin_fixture("F1")}, "core", kDefaultSeed);
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_EQ(r.count(Status::Skipped), 0u);
}

TEST(Suite, EveryCriterionHasAChecker)
{
  std::set<int> seen;
  for (const auto& c : check_registry())
    seen.insert(c.criterion);
  for (int k = 1; k <= 9; ++k)
    EXPECT_TRUE(seen.count(k)) << k;
}
