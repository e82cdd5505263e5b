#pragma once

#include "xprod/afunction.hpp"
#include "xprod/dynamics.hpp"

namespace xprod {

// [f * g](s) = sum_r f(r) alpha_r(g(r^-1 s))
AFunction twisted_convolve(const DynamicalSystem& sys, const AFunction& f, const AFunction& g);
// Convolution of the opposite system written in the product order of A:
// [F *o G](s) = sum_r alpha_{r^-1}(G(s r^-1)) F(r)
AFunction opposite_convolve(const DynamicalSystem& sys, const AFunction& f, const AFunction& g);

// Matrices of g -> f * g and f -> f * g on the flat |G| d coordinates.
Mat convolution_left_matrix(const DynamicalSystem& sys, const AFunction& f);
Mat convolution_right_matrix(const DynamicalSystem& sys, const AFunction& g);

// (sum_s ||f(s)||^p w(s))^(1/p)
double weighted_norm(const NormedAlgebra& a, const AFunction& f, const Weight& w, double p = 1.0);

// h^(s) = alpha_s(h(s)) and its inverse h_v(s) = alpha_{s^-1}(h(s)).
AFunction hat_conjugator(const DynamicalSystem& sys, const AFunction& h);
AFunction check_conjugator(const DynamicalSystem& sys, const AFunction& h);

// f^(s) = chi(s^-1) alpha_{s^-1}(f(s)); inverse g_v(s) = chi(s) alpha_s(g(s)).
AFunction hat_anti_iso(const DynamicalSystem& sys, const Character& chi, const AFunction& f);
AFunction check_anti_iso(const DynamicalSystem& sys, const Character& chi, const AFunction& g);

// (T_chi f)(s) = chi(s) f(s^-1), an involution.
AFunction t_chi(const FiniteGroup& g, const Character& chi, const AFunction& f);
// (S_chi f)(s) = chi(s^-1) alpha_{s^-1}(f(s)); (S_chi^-1 f)(s) = chi(s) alpha_s(f(s)).
AFunction s_chi(const DynamicalSystem& sys, const Character& chi, const AFunction& f);
AFunction s_chi_inverse(const DynamicalSystem& sys, const Character& chi, const AFunction& f);

Mat t_chi_matrix(const FiniteGroup& g, std::size_t d, const Character& chi);
Mat s_chi_matrix(const DynamicalSystem& sys, const Character& chi);
Mat s_chi_inverse_matrix(const DynamicalSystem& sys, const Character& chi);

// L^1(G, A, w; alpha) at finite scale.
class BeurlingAlgebra {
public:
  BeurlingAlgebra(DynamicalSystem sys, Weight w);

  const DynamicalSystem& system() const { return sys_; }
  const Weight& weight() const { return w_; }
  std::size_t dim() const { return sys_.order() * sys_.dim(); }

  AFunction multiply(const AFunction& f, const AFunction& g) const { return twisted_convolve(sys_, f, g); }
  double norm(const AFunction& f) const { return weighted_norm(sys_.algebra(), f, w_, 1.0); }
  // ||f * g|| <= C_alpha ||f|| ||g||
  double submultiplicative_constant() const { return sys_.c_alpha_value(); }
  // delta_e (x) u for the identity u of A, when A is unital
  std::optional<AFunction> unit() const;

private:
  DynamicalSystem sys_;
  Weight w_;
};

} // namespace xprod
