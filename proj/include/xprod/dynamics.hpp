#pragma once

#include "xprod/algebra.hpp"
#include "xprod/group.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace xprod {

// (A, G, alpha): alpha[g] is the d x d matrix of an automorphism of A.
class DynamicalSystem {
public:
  DynamicalSystem() = default;

  const NormedAlgebra& algebra() const { return a_; }
  const FiniteGroup& group() const { return g_; }
  const Mat& alpha(std::size_t g) const { return alpha_[g]; }
  const std::vector<Mat>& alphas() const { return alpha_; }
  std::size_t order() const { return g_.order(); }
  std::size_t dim() const { return a_.dim(); }

  // max_g ||alpha_g|| (operator norm induced by the algebra norm)
  const NormBounds& c_alpha() const { return c_alpha_; }
  double c_alpha_value() const { return c_alpha_.upper; }
  bool isometric() const { return isometric_; }
  const std::string& name() const { return name_; }

  // (A^op, G^op, alpha^op) with alpha^op_r = alpha_{r^-1}
  DynamicalSystem opposite() const;
  // (A, G^op, alpha^op)
  DynamicalSystem with_opposite_group() const;
  // (A^op, G, alpha)
  DynamicalSystem with_opposite_algebra() const;

  friend DynamicalSystem make_system(const NormedAlgebra& a, const FiniteGroup& g, std::vector<Mat> alpha,
                                     const std::string& name, std::optional<double> exact_c_alpha);

private:
  NormedAlgebra a_;
  FiniteGroup g_;
  std::vector<Mat> alpha_;
  NormBounds c_alpha_;
  bool isometric_ = false;
  std::string name_;
};

// Checks alpha_e = I, alpha_g alpha_h = alpha_gh, multiplicativity on basis pairs,
// invertibility. Throws NotHomomorphism(g,h) / NotMultiplicative(g) / NotInvertible(g).
// exact_c_alpha, when given, must lie inside the computed bounds and then replaces them.
DynamicalSystem make_system(const NormedAlgebra& a, const FiniteGroup& g, std::vector<Mat> alpha,
                            const std::string& name = "custom",
                            std::optional<double> exact_c_alpha = std::nullopt);

DynamicalSystem trivial_action(const NormedAlgebra& a, const FiniteGroup& g);
// alpha_g(e_i) = e_{perm[g][i]}
DynamicalSystem coordinate_permutation(const NormedAlgebra& a, const FiniteGroup& g,
                                       const std::vector<std::vector<std::size_t>>& perm);
// alpha_g(a) = rho(g) a rho(g)^-1 on M_n; C_alpha = max ||rho(g)|| ||rho(g)^-1||.
DynamicalSystem inner_conjugation(const NormedAlgebra& a, const FiniteGroup& g, const std::vector<Mat>& rho);

// Whether m is a permutation matrix with unimodular entries.
bool is_phase_permutation(const Mat& m, double tol = 1e-12);

} // namespace xprod
