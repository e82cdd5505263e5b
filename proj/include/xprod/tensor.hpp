#pragma once

#include "xprod/correspondence.hpp"

#include <vector>

namespace xprod {

// Algebraic tensor product of finite-dimensional normed algebras.
class TensorAlgebra {
public:
  TensorAlgebra(std::vector<NormedAlgebra> factors);

  const std::vector<NormedAlgebra>& factors() const { return factors_; }
  const Structure& structure() const { return s_; }
  std::size_t dim() const { return s_.dim(); }
  Vec elementary(const std::vector<Vec>& parts) const;
  Vec multiply(const Vec& a, const Vec& b) const { return s_.multiply(a, b); }

private:
  std::vector<NormedAlgebra> factors_;
  Structure s_;
};

Vec kron_vec(const Vec& a, const Vec& b);

struct ProjectiveBounds {
  double lower = 0.0; // from norm-one bilinear forms
  double upper = 0.0; // from explicit decompositions
};

// Bounds on the projective norm of t in A (x) B (index i*dB + j).
ProjectiveBounds projective_norm_bounds(const NormedAlgebra& a, const NormedAlgebra& b, const Vec& t, Rng& rng,
                                        int restarts = 8);

// A representation of a finite-dimensional algebra by basis images.
struct AlgebraRep {
  Structure domain;
  SpaceNorm space;
  std::vector<Mat> images;

  std::size_t space_dim() const { return space.dim(); }
  Mat apply(const Vec& x) const;
  double multiplicativity_error() const;
};

AlgebraRep as_algebra_rep(const ConvolutionRep& t, const Structure& domain);

// (pi1 . pi2)(b1 (x) b2) = pi1(b1) pi2(b2). Throws NotCommuting.
AlgebraRep odot(const AlgebraRep& p1, const AlgebraRep& p2, double tol = 1e-10);

// pi_i(b) = pi(1 (x) ... (x) b (x) ... (x) 1), b in slot i.
std::vector<AlgebraRep> decompose_rep(const AlgebraRep& pi, const std::vector<Structure>& factors,
                                      const std::vector<Vec>& units);

struct SweepPoint {
  cd c;
  double product_error;      // ||(c pi1) . (pi2 / c) - pi||
  double multiplicativity;   // worst of the two factor defects
  bool pass;
};

// Rescales pi1 by c and pi2 by 1/c; only c = 1 keeps both factors multiplicative.
std::vector<SweepPoint> uniqueness_sweep(const AlgebraRep& pi, const AlgebraRep& p1, const AlgebraRep& p2,
                                         const std::vector<cd>& cs, double tol = 1e-10);

struct NFold {
  std::vector<AlgebraRep> factors; // pi_i x| U_i on each crossed product
  AlgebraRep product;              // iterated binary product
};

// Pairwise-commuting (m,m) pairs on a common space -> representation of the tensor
// product of the crossed products. Throws NotCommuting naming (i,j).
NFold n_fold_correspondence(const std::vector<CrossedProduct>& cps, const std::vector<CovariantPair>& pairs,
                            double tol = 1e-10);
// Decomposes and recovers the pairs. Needs unital factors.
std::vector<CovariantPair> n_fold_inverse(const std::vector<CrossedProduct>& cps, const AlgebraRep& product);

} // namespace xprod
