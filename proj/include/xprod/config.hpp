#pragma once

#include "xprod/afunction.hpp"
#include "xprod/crossed.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace xprod {

struct Tolerances {
  double equality = 1e-9;    // relative, for equalities
  double inequality = 1e-12; // rounding allowance for inequalities
  double tight = 1e-10;      // identities that hold entrywise
};

// A system plus the data every check needs.
struct Fixture {
  std::string id;
  DynamicalSystem sys;
  Weight w;
  std::vector<Character> characters; // characters[0] is trivial
  RepClass r;                        // the class R, the induced pair first when present
  std::string notes;
};

struct Config {
  std::vector<Fixture> fixtures;
  std::string suite = "all";
  std::uint64_t seed = 0;
  Tolerances tol;
};

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr const char* kSeedEnv = "XPROD_SEED";
// kDefaultSeed unless the environment variable overrides it
std::uint64_t default_seed();

const std::vector<std::string>& suite_names();

cd complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(cd z);
Mat matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Mat& m);

// {"0": [[re,im], ...], "1": [...]} keyed by group element index
AFunction afunction_from_json(const nlohmann::json& j, std::size_t order, std::size_t dim);
nlohmann::json afunction_to_json(const AFunction& f);

Fixture fixture_from_json(const nlohmann::json& j);
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);
nlohmann::json load_json(const std::string& path);

} // namespace xprod
