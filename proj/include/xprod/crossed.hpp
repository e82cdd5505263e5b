#pragma once

#include "xprod/afunction.hpp"
#include "xprod/convolution.hpp"
#include "xprod/pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xprod {

using RepClass = std::vector<CovariantPair>;

struct ClassNorms {
  NormBounds c_r;              // max ||pi||
  std::vector<NormBounds> nu_r; // nu(r) = max ||U_r||
};

ClassNorms class_norms(const DynamicalSystem& sys, const RepClass& r);

// sum_s pi(f(s)) U_s for (m,m), sum_r U_r pi(f(r)) for (a,a). Other flavors: FlavorMismatch.
Mat integrated_form(const DynamicalSystem& sys, const CovariantPair& p, const AFunction& f);
// The linear map f -> vec(integrated form), an m^2 x (|G| d) matrix.
Mat integrated_form_matrix(const DynamicalSystem& sys, const CovariantPair& p);

// sigma^R(f) = max over pairs of the operator norm of the integrated form.
NormBounds seminorm(const DynamicalSystem& sys, const RepClass& r, const AFunction& f);

// Orthonormal basis of the common null space of the integrated forms.
Mat class_kernel(const DynamicalSystem& sys, const RepClass& r, double rel_tol = 1e-10);

// The Hausdorff completion of (C_c(G, A), sigma^R), in coordinates on the
// orthogonal complement of ker sigma^R.
class CrossedProduct {
public:
  const DynamicalSystem& system() const { return sys_; }
  const RepClass& rep_class() const { return r_; }
  const Mat& kernel() const { return kernel_; }
  // columns: orthonormal basis of the complement; q(f) = basis^* f
  const Mat& basis() const { return q_; }
  std::size_t quotient_dim() const { return std::size_t(q_.cols()); }
  const Structure& structure() const { return s_; }

  Vec q(const AFunction& f) const { return q_.adjoint() * f.flat(); }
  AFunction lift(const Vec& c) const { return AFunction(sys_.order(), sys_.dim(), q_ * c); }
  Vec multiply(const Vec& a, const Vec& b) const { return s_.multiply(a, b); }
  NormBounds norm(const Vec& c) const { return seminorm(sys_, r_, lift(c)); }
  // left multiplication by c on the quotient
  Mat left_mult(const Vec& c) const { return s_.left_mult(c); }
  // q(delta_e (x) 1) when A is unital
  std::optional<Vec> unit() const;

  friend CrossedProduct build_crossed_product(const DynamicalSystem& sys, const RepClass& r);

private:
  DynamicalSystem sys_;
  RepClass r_;
  Mat kernel_, q_;
  Structure s_;
};

// Throws KernelNotIdeal if the kernel fails to be a two-sided ideal.
CrossedProduct build_crossed_product(const DynamicalSystem& sys, const RepClass& r);

// i_A(a) f(s) = a f(s), i_G(r) f(s) = alpha_r(f(r^-1 s)), descended to the quotient.
struct CanonicalMaps {
  std::vector<Mat> i_a; // per basis element of A
  std::vector<Mat> i_g; // per group element
  Mat i_a_of(const Vec& a) const;
};

CanonicalMaps canonical_maps(const CrossedProduct& cp);
// sum_s i_A(f(s)) i_G(s) on the quotient
Mat canonical_integrated(const CrossedProduct& cp, const CanonicalMaps& maps, const AFunction& f);

// sup over sampled g of sigma(f*g)/sigma(g); the unit is always among the samples
// when it exists.
NormBounds left_mult_norm(const CrossedProduct& cp, const Vec& c, Rng& rng, int samples = 16);

// Block-diagonal sum of the class on the l^p direct sum of the pair spaces.
CovariantPair direct_sum_realization(const DynamicalSystem& sys, const RepClass& r, PNorm p);

struct ClassComparison {
  double m_lower = 0.0;       // max sampled sigma1/sigma2
  bool dominated = false;     // ker sigma2 inside ker sigma1
  bool division_undefined = false;
  std::optional<double> best_m; // when the sigma2 quotient has dimension <= 2
  std::string certificate;
};

ClassComparison compare_classes(const DynamicalSystem& sys, const RepClass& r1, const RepClass& r2, Rng& rng,
                                int samples = 32);

} // namespace xprod
