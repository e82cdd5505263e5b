#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace xprod {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

enum class PNorm { One, Two, Inf };

// A quantity known to lie in [lower, upper]. `lower` is always attained by an
// explicit witness; `upper` is a proven bound (possibly loose).
struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;

  static NormBounds exact(double v) { return {v, v}; }
  bool is_exact(double rel = 1e-12) const { return upper - lower <= rel * std::max(1.0, upper); }
  double value() const { return lower; }
};

NormBounds bounds_max(const NormBounds& a, const NormBounds& b);
NormBounds bounds_product(const NormBounds& a, const NormBounds& b);
NormBounds bounds_scale(const NormBounds& a, double s);

double vec_norm(const Vec& v, PNorm p);
double induced_norm(const Mat& m, PNorm p);
double spectral_norm(const Mat& m);
double max_abs(const Mat& m);
double max_abs(const Vec& v);

// max|a-b| / max(1, max|b|)
double rel_diff(const Mat& a, const Mat& b);

// Orthonormal basis (columns) of the null space of m. A singular value counts as
// zero when it is at most rel_tol times the largest one.
Mat nullspace(const Mat& m, double rel_tol = 1e-10);
std::size_t numerical_rank(const Mat& m, double rel_tol = 1e-10);

// Orthonormal basis of the orthogonal complement of span(basis) in C^n.
Mat orthogonal_complement(const Mat& basis, Eigen::Index n);

// Residual of projecting v onto the column span of the orthonormal basis q.
double distance_to_span(const Mat& q, const Vec& v);

Vec random_vec(Rng& rng, Eigen::Index n);
Mat random_mat(Rng& rng, Eigen::Index rows, Eigen::Index cols);
Mat random_unitary(Rng& rng, Eigen::Index n);
// I plus a small random perturbation; comfortably invertible.
Mat random_invertible(Rng& rng, Eigen::Index n);

// Column-major flattening.
Vec vec_of(const Mat& m);

} // namespace xprod
