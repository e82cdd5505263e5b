#pragma once

#include "xprod/crossed.hpp"

#include <array>
#include <string>
#include <utility>

namespace xprod {

// (lambda~, Lambda) on A^G with ||.||_{1,w}:
//   [lambda~(a) h](s) = alpha_{s^-1}(a) h(s),  (Lambda_r h)(s) = h(r^-1 s)
// Throws NoApproximateIdentity when A has no one-sided identity.
CovariantPair induced_pair(const DynamicalSystem& sys, const Weight& w);

// Operator norm of T : (A^G, ||.||_{1,w}) -> B(X) by the l^1 extreme-point reduction
// max_r sup_{||a||<=1} ||T(delta_r (x) a)|| / w(r).
NormBounds l1_operator_norm(const DynamicalSystem& sys, const Weight& w, const SpaceNorm& x,
                            const std::function<Mat(const AFunction&)>& t);

// Checks (1/(C_alpha M w(e))) ||f|| <= ||L(f)|| <= K sigma^R(f) <= K C^R ||f||
// where L is the integrated form of the induced pair and K its norm for sigma^R.
struct ChainReport {
  double f_norm = 0.0;
  double lower_term = 0.0;
  NormBounds induced;
  NormBounds k;
  bool k_certified = false;
  NormBounds sigma;
  NormBounds c_r;
  std::array<bool, 3> holds{};
  std::array<double, 3> slack{}; // rhs - lhs using the witnessed values
  bool corollary_regime = false;
  double corollary_error = 0.0;  // |sigma - ||f||| / ||f|| in the corollary regime
};

class InequalityChain {
public:
  // Throws HypothesisViolated naming the failing hypothesis.
  InequalityChain(const DynamicalSystem& sys, const Weight& w, const RepClass& r);

  ChainReport check(const AFunction& f, double tol = 1e-12) const;
  const CovariantPair& induced() const { return induced_; }
  bool corollary_regime() const { return corollary_; }
  double right_identity_bound() const { return m_; }

private:
  DynamicalSystem sys_;
  Weight w_;
  RepClass r_;
  CovariantPair induced_;
  ClassNorms norms_;
  double m_ = 1.0;
  bool member_ = false;
  bool corollary_ = false;
  double k_sampled_ = 0.0;
};

// T on C_c(G, A) or on a quotient of it, in quotient coordinates q(f) = basis^* f.
struct ConvolutionRep {
  DynamicalSystem sys;
  Mat basis;
  SpaceNorm space;
  std::vector<Mat> images; // T(basis column k)
  bool anti = false;

  std::size_t space_dim() const { return space.dim(); }
  Mat apply_coords(const Vec& c) const;
  Mat operator()(const AFunction& f) const { return apply_coords(basis.adjoint() * f.flat()); }
  // max over basis pairs of ||T(x*y) - T(x)T(y)|| (or T(y)T(x) when anti)
  double multiplicativity_error() const;
  bool non_degenerate() const;
};

// (pi, U) -> pi x| U on the crossed product. Throws KernelNotRespected / NotNonDegenerate.
ConvolutionRep pair_to_rep(const CrossedProduct& cp, const CovariantPair& p);
// (pi, U) -> integrated form on the whole of C_c(G, A) = L^1(G, A, w; alpha).
ConvolutionRep beurling_rep(const DynamicalSystem& sys, const CovariantPair& p);

// pi^T(a) = T(delta_e (x) a u), U^T_s = T(delta_s (x) u) with u a left identity.
CovariantPair rep_to_pair(const ConvolutionRep& t, const std::string& label = "recovered");

struct RepBounds {
  NormBounds t_norm;              // ||T|| for ||.||_{1,w}
  NormBounds c_u;                 // sup_r ||U_r|| / w(r)
  NormBounds pi_norm;             // ||pi||
  NormBounds pi_t_norm;           // ||pi^T||
  std::vector<NormBounds> u_t;    // ||U^T_s||
  double m = 1.0;                 // identity bound
  double w_e = 1.0;
  std::array<bool, 3> holds{};
  std::array<double, 3> slack{};
};

// (1) ||T|| <= C_U ||pi||, (2) ||pi^T|| <= w(e) ||T||, (3) ||U^T_s|| <= M w(e) ||T|| w(s)
RepBounds correspondence_bounds(const DynamicalSystem& sys, const Weight& w, const CovariantPair& p,
                                const ConvolutionRep& t, const CovariantPair& recovered, double tol = 1e-12);

// Tbar(L) = T(L(1)) for a left centralizer L of the (unital) quotient.
// Throws NotCentralizer if L fails to commute with right multiplications.
Mat centralizer_extend(const CrossedProduct& cp, const ConvolutionRep& t, const Mat& l);

// T(f) = sum_r U_r pi(f(r)) for an (a,a) pair; anti-multiplicative.
ConvolutionRep anti_pair_to_antirep(const DynamicalSystem& sys, const CovariantPair& p);
// pi(a) = T((delta_e (x) u a)^v), U_s = T((delta_s (x) u)^v), u a right identity.
CovariantPair antirep_to_anti_pair(const ConvolutionRep& t, const std::string& label = "recovered anti");

// Re-reads a pair of any flavor as (m,m) over the companion system:
// (m,a) over (A,G^op,alpha^op), (a,m) over (A^op,G,alpha), (a,a) over (A^op,G^op,alpha^op).
std::pair<DynamicalSystem, CovariantPair> retype_pair(const DynamicalSystem& sys, const CovariantPair& p);

struct BimoduleReps {
  ConvolutionRep t_m; // representation of L^1(G, A, w; alpha)
  ConvolutionRep t_a; // anti-representation of L^1(H, B, eta; beta)
  double commutator = 0.0;
};

// Throws NotCommuting naming the offending pair of maps.
BimoduleReps bimodule_correspondence(const DynamicalSystem& sys_a, const CovariantPair& pm,
                                     const DynamicalSystem& sys_b, const CovariantPair& pa, double tol = 1e-10);
std::pair<CovariantPair, CovariantPair> bimodule_inverse(const BimoduleReps& reps);

// Largest ||XY - YX|| over the basis images of the two families.
double max_commutator(const std::vector<Mat>& x, const std::vector<Mat>& y);

} // namespace xprod
