#pragma once

#include "xprod/pair.hpp"

#include <string>

namespace xprod {

// One row of the catalogue of canonical actions on C_c(G, A):
//   (pi(a) f)(s) = tw_s(a) f(s)   or   f(s) tw_s(a),  tw_s in {id, alpha_s, alpha_{s^-1}}
//   (U_r f)(s)   = chi(r) beta_r(f(shift_r(s))),      beta_r in {id, alpha_r, alpha_{r^-1}}
enum class PiSide { Left, Right };
enum class Twist { None, Alpha, AlphaInverse };
enum class Shift { RInvS, SR, SRInv, RS };

struct ActionLine {
  PiSide side;
  Twist pi_twist;  // indexed by s
  Twist u_twist;   // indexed by r
  Shift shift;
  Flavor flavor;   // as printed
  CovarianceLaw law;
};

// Lines 1..16 of the covariant catalogue and 1..8 of the commuting one.
const ActionLine& covariant_line(int line);
const ActionLine& commuting_line(int line);

struct TableAction {
  CovariantPair pair;
  FlavorReport empirical;
  bool flavor_matches = true; // printed flavor holds
  std::string discrepancy;    // empty when it matches
};

// Pair on the |G| d coefficient space with the l^1(G, A) norm. The covariance
// law is checked at construction (CovarianceViolated naming the line).
TableAction covariant_action(const DynamicalSystem& sys, int line, const Character& chi);
TableAction commuting_action(const DynamicalSystem& sys, int line, const Character& chi);
TableAction build_action(const DynamicalSystem& sys, const ActionLine& spec, const Character& chi,
                         const std::string& label);

} // namespace xprod
