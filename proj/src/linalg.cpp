#include "xprod/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace xprod {

NormBounds bounds_max(const NormBounds& a, const NormBounds& b)
{
  return {std::max(a.lower, b.lower), std::max(a.upper, b.upper)};
}

NormBounds bounds_product(const NormBounds& a, const NormBounds& b)
{
  return {a.lower * b.lower, a.upper * b.upper};
}

NormBounds bounds_scale(const NormBounds& a, double s)
{
  return {a.lower * s, a.upper * s};
}

double vec_norm(const Vec& v, PNorm p)
{
  switch (p) {
  case PNorm::One: return v.cwiseAbs().sum();
  case PNorm::Two: return v.norm();
  case PNorm::Inf: return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  }
  return 0.0;
}

double spectral_norm(const Mat& m)
{
  if (m.size() == 0)
    return 0.0;
  if (m.rows() == 2 && m.cols() == 2) {
    // largest eigenvalue of m^* m in a form free of cancellation
    Eigen::Matrix2cd h = m.adjoint() * m;
    double a = h(0, 0).real(), d = h(1, 1).real();
    double lam = 0.5 * (a + d) + std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return std::sqrt(std::max(0.0, lam));
  }
  // the top eigenvalue of m^* m carries relative error ~eps, like the SVD, at a fraction of the cost
  Mat h = m.rows() >= m.cols() ? Mat(m.adjoint() * m) : Mat(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double induced_norm(const Mat& m, PNorm p)
{
  if (m.size() == 0)
    return 0.0;
  switch (p) {
  case PNorm::One: return m.cwiseAbs().colwise().sum().maxCoeff();
  case PNorm::Inf: return m.cwiseAbs().rowwise().sum().maxCoeff();
  case PNorm::Two: return spectral_norm(m);
  }
  return 0.0;
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

double rel_diff(const Mat& a, const Mat& b)
{
  return max_abs(Mat(a - b)) / std::max(1.0, max_abs(b));
}

Mat nullspace(const Mat& m, double rel_tol)
{
  const Eigen::Index n = m.cols();
  if (m.rows() == 0)
    return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rel_tol * smax)
        ++rank;
  return svd.matrixV().rightCols(n - rank);
}

std::size_t numerical_rank(const Mat& m, double rel_tol)
{
  if (m.size() == 0)
    return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0)
    return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0))
      ++r;
  return r;
}

Mat orthogonal_complement(const Mat& basis, Eigen::Index n)
{
  if (basis.cols() == 0)
    return Mat::Identity(n, n);
  return nullspace(basis.adjoint());
}

double distance_to_span(const Mat& q, const Vec& v)
{
  if (q.cols() == 0)
    return v.norm();
  return (v - q * (q.adjoint() * v)).norm();
}

Vec random_vec(Rng& rng, Eigen::Index n)
{
  std::normal_distribution<double> nd;
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = cd(nd(rng), nd(rng));
  return v;
}

Mat random_mat(Rng& rng, Eigen::Index rows, Eigen::Index cols)
{
  std::normal_distribution<double> nd;
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      m(i, j) = cd(nd(rng), nd(rng));
  return m;
}

Mat random_unitary(Rng& rng, Eigen::Index n)
{
  Eigen::HouseholderQR<Mat> qr(random_mat(rng, n, n));
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phases so the distribution is Haar
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = std::abs(r(i, i));
    if (a > 0)
      q.col(i) *= r(i, i) / a;
  }
  return q;
}

Mat random_invertible(Rng& rng, Eigen::Index n)
{
  Mat m = random_mat(rng, n, n);
  return Mat::Identity(n, n) + 0.15 / std::sqrt(double(std::max<Eigen::Index>(n, 1))) * m;
}

Vec vec_of(const Mat& m)
{
  return Eigen::Map<const Vec>(m.data(), m.size());
}

} // namespace xprod
