#pragma once

#include "xprod/dynamics.hpp"
#include "xprod/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xprod {

// (pi, U): m = multiplicative, a = anti-multiplicative.
enum class Flavor { MM, MA, AM, AA };

// Which automorphism U_r pi(a) U_r^-1 must reproduce:
// pi(alpha_r a), pi(alpha_{r^-1} a), or pi(a).
enum class CovarianceLaw { Alpha, AlphaInverse, Commuting };

const char* to_string(Flavor f);
const char* to_string(CovarianceLaw l);
Flavor flavor_from_string(const std::string& s);
bool pi_multiplicative(Flavor f);
bool u_multiplicative(Flavor f);
CovarianceLaw default_law(Flavor f);

struct FlavorReport {
  double pi_mult_error = 0.0;
  double pi_anti_error = 0.0;
  double u_mult_error = 0.0;
  double u_anti_error = 0.0;
  // which laws hold at the given tolerance
  bool pi_mult = false, pi_anti = false, u_mult = false, u_anti = false;
};

struct CovariantPair {
  SpaceNorm space;
  std::vector<Mat> pi; // images of the basis of A
  std::vector<Mat> u;  // one per group element
  Flavor flavor = Flavor::MM;
  CovarianceLaw law = CovarianceLaw::Alpha;
  bool non_degenerate = false;
  std::string label;

  std::size_t space_dim() const { return space.dim(); }
  Mat pi_of(const Vec& a) const;
};

FlavorReport classify_flavor(const DynamicalSystem& sys, const std::vector<Mat>& pi, const std::vector<Mat>& u,
                             double tol = 1e-10);
double covariance_defect(const DynamicalSystem& sys, const std::vector<Mat>& pi, const std::vector<Mat>& u,
                         CovarianceLaw law);
// rank of [pi(e_1) ... pi(e_d)] equals m
bool is_non_degenerate(const std::vector<Mat>& pi, std::size_t m);

// Validates the declared flavor (FlavorMismatch) and covariance law (CovarianceViolated).
CovariantPair make_pair(const DynamicalSystem& sys, SpaceNorm space, std::vector<Mat> pi, std::vector<Mat> u,
                        Flavor flavor, std::optional<CovarianceLaw> law = std::nullopt,
                        const std::string& label = "pair", double tol = 1e-10);

// Same matrices under a new system, flavor and law, re-validated.
CovariantPair recheck_pair(const DynamicalSystem& sys, const CovariantPair& p, Flavor flavor, CovarianceLaw law,
                           const std::string& label);

// (S pi S^-1, S U S^-1) on C^m with the given norm.
CovariantPair conjugate_pair(const DynamicalSystem& sys, const CovariantPair& p, const Mat& s, SpaceNorm space,
                             const std::string& label);

double pair_distance(const CovariantPair& a, const CovariantPair& b);

} // namespace xprod
