#pragma once

#include "xprod/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xprod {

// e_i e_j = sum_k c(i,j,k) e_k
class Structure {
public:
  Structure() = default;
  Structure(std::size_t dim, std::vector<cd> coeffs);

  std::size_t dim() const { return d_; }
  cd c(std::size_t i, std::size_t j, std::size_t k) const { return coeffs_[(i * d_ + j) * d_ + k]; }
  const std::vector<cd>& coeffs() const { return coeffs_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  // x -> a x
  Mat left_mult(const Vec& a) const;
  // x -> x a
  Mat right_mult(const Vec& a) const;
  const Mat& left_basis(std::size_t i) const { return left_[i]; }

  Structure opposite() const;
  // Largest |(e_i e_j) e_k - e_i (e_j e_k)| over basis triples.
  double associativity_defect() const;

  // Solves for u with u a = a (left) or a u = a (right) for all a.
  std::optional<Vec> find_left_identity(double tol = 1e-10) const;
  std::optional<Vec> find_right_identity(double tol = 1e-10) const;

private:
  std::size_t d_ = 0;
  std::vector<cd> coeffs_;
  std::vector<Mat> left_;
};

// Structure constants of the tensor product; basis e_i (x) f_j has index i*d2 + j.
Structure kron(const Structure& a, const Structure& b);

enum class NormTag { Sup, One, Operator };

const char* to_string(NormTag t);

class NormedAlgebra {
public:
  NormedAlgebra() = default;

  std::size_t dim() const { return s_.dim(); }
  const Structure& structure() const { return s_; }
  NormTag norm_tag() const { return tag_; }
  // matrix size for the operator tag
  std::size_t op_n() const { return op_n_; }
  const std::string& name() const { return name_; }

  const std::optional<Vec>& identity() const { return identity_; }
  const std::optional<Vec>& left_identity() const { return left_identity_; }
  const std::optional<Vec>& right_identity() const { return right_identity_; }
  // Norm of the (one-sided) identity used as the approximate-identity bound.
  double identity_bound() const;
  bool has_one_sided_identity() const { return left_identity_ || right_identity_; }

  Vec multiply(const Vec& a, const Vec& b) const { return s_.multiply(a, b); }
  double norm(const Vec& a) const;
  Mat left_regular(const Vec& a) const { return s_.left_mult(a); }
  Mat right_regular(const Vec& a) const { return s_.right_mult(a); }
  Vec basis(std::size_t i) const { return Vec::Unit(dim(), i); }

  // Operator tag only: coordinates <-> n x n matrix, index i*n + j.
  Mat as_matrix(const Vec& a) const;
  Vec from_matrix(const Mat& m) const;

  // c_op(i,j,k) = c(j,i,k); left and right identities swap.
  NormedAlgebra opposite() const;

  // Sup of a seminorm f over the closed unit ball, via the extreme points.
  // Exact for the One tag; for Sup a phase grid with a Lipschitz certificate;
  // for Operator sampled unitaries with a triangle-inequality upper bound.
  NormBounds ball_sup(const std::function<double(const Vec&)>& f) const;

  // Induced norm of a linear map A -> A given as a d x d matrix.
  NormBounds map_norm(const Mat& m) const;

  // phi with dual norm 1 and phi(a) = ||a||, so that phi(x) = sum_i phi_i x_i.
  Vec norming_functional(const Vec& a) const;
  double dual_norm(const Vec& phi) const;

  friend NormedAlgebra make_algebra(Structure s, NormTag tag, const std::string& name,
                                    std::optional<std::size_t> op_n);

private:
  Structure s_;
  NormTag tag_ = NormTag::One;
  std::size_t op_n_ = 0;
  std::optional<Vec> identity_, left_identity_, right_identity_;
  std::string name_;
};

// Validates associativity, detects identities. Throws NotAssociative / DimensionMismatch.
NormedAlgebra make_algebra(Structure s, NormTag tag, const std::string& name = "custom",
                           std::optional<std::size_t> op_n = std::nullopt);

NormedAlgebra scalar_algebra();
// C^n, pointwise product, sup norm.
NormedAlgebra diagonal_algebra(std::size_t n);
// M_n, operator norm.
NormedAlgebra matrix_algebra(std::size_t n);
// {[[x,0],[y,0]]} in coordinates (x,y), one-norm. Right identity only.
NormedAlgebra column_algebra();
// "scalars", "diag(n)", "matrix(n)", "column(2)"
NormedAlgebra algebra_by_name(const std::string& name);

} // namespace xprod
