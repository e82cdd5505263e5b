#pragma once

#include "xprod/config.hpp"
#include "xprod/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace xprod {

struct CheckContext {
  const Fixture& fx;
  Rng& rng;
  const Tolerances& tol;
};

struct CheckSpec {
  std::string id;
  std::string anchor;
  std::string suite; // core, beurling, correspondence, anti, tensor, actions
  int criterion = 0;
  std::function<CheckRecord(const CheckContext&)> run;
};

const std::vector<CheckSpec>& check_registry();

// Runs every check of the suite on every fixture. Deterministic given the seed:
// each (check, fixture) draws from its own stream.
Report run_suite(const std::vector<Fixture>& fixtures, const std::string& suite, std::uint64_t seed,
                 const Tolerances& tol = {});
Report run_suite(const Config& cfg);

// Null space by Gaussian elimination with partial pivoting on the full matrix of
// f -> (pi x| U)(f) over the basis of A^G; independent of the SVD path.
Mat rref_nullspace(const Mat& m, double rel_tol = 1e-9);
Mat brute_force_kernel(const DynamicalSystem& sys, const RepClass& r);

} // namespace xprod
