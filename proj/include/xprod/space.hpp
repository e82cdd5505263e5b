#pragma once

#include "xprod/algebra.hpp"
#include "xprod/linalg.hpp"

#include <memory>
#include <vector>

namespace xprod {

// A norm on C^m for the space a covariant pair acts on.
//   Lp:        l^p on coordinates, p in {1, 2, inf}.
//   Blocks:    C^(n d) = A^G with sum_s w(s) ||x(s)||_A.
//   DirectSum: l^p direct sum of child spaces.
class SpaceNorm {
public:
  enum class Kind { Lp, Blocks, DirectSum };

  static SpaceNorm lp(std::size_t m, PNorm p);
  static SpaceNorm blocks(const NormedAlgebra& a, std::vector<double> weights);
  static SpaceNorm direct_sum(std::vector<SpaceNorm> children, PNorm p);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return m_; }
  PNorm p() const { return p_; }
  const std::vector<SpaceNorm>& children() const { return children_; }
  const NormedAlgebra& algebra() const { return *alg_; }
  const std::vector<double>& weights() const { return weights_; }

  double norm(const Vec& x) const;

  // Operator norm of t : X -> X.
  NormBounds operator_norm(const Mat& t) const;
  // True when operator_norm returns lower == upper for every operator in ops.
  bool exact_operator_norm(const std::vector<Mat>& ops) const;

  // sup over the unit ball of A of ||sum_i a_i images[i]||_{X -> X}
  NormBounds rep_norm(const NormedAlgebra& a, const std::vector<Mat>& images) const;

  std::string describe() const;

private:
  Kind kind_ = Kind::Lp;
  std::size_t m_ = 0;
  PNorm p_ = PNorm::Two;
  std::shared_ptr<const NormedAlgebra> alg_;
  std::vector<double> weights_;
  std::vector<SpaceNorm> children_;
};

} // namespace xprod
