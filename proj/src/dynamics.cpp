#include "xprod/dynamics.hpp"

#include "xprod/error.hpp"

#include <cmath>
#include <sstream>

namespace xprod {

bool is_phase_permutation(const Mat& m, double tol)
{
  if (m.rows() != m.cols())
    return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int nz = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double a = std::abs(m(i, j));
      if (a > tol) {
        if (std::abs(a - 1.0) > tol)
          return false;
        ++nz;
      }
    }
    if (nz != 1)
      return false;
  }
  // columns each carry one unit entry; rows must too
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int nz = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      nz += std::abs(m(i, j)) > tol;
    if (nz != 1)
      return false;
  }
  return true;
}

namespace {

bool sampled_isometry(const NormedAlgebra& a, const Mat& m)
{
  Rng rng(0x150ULL);
  for (int k = 0; k < 24; ++k) {
    Vec x = random_vec(rng, a.dim());
    double nx = a.norm(x), ny = a.norm(m * x);
    if (std::abs(nx - ny) > 1e-10 * std::max(1.0, nx))
      return false;
  }
  return true;
}

} // namespace

DynamicalSystem make_system(const NormedAlgebra& a, const FiniteGroup& g, std::vector<Mat> alpha,
                            const std::string& name, std::optional<double> exact_c_alpha)
{
  const std::size_t d = a.dim(), n = g.order();
  if (alpha.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "one automorphism per group element expected");
  for (const auto& m : alpha)
    if (std::size_t(m.rows()) != d || std::size_t(m.cols()) != d)
      throw Error(ErrorKind::DimensionMismatch, "automorphism matrix must be d x d");

  auto tol = [](const Mat& ref) { return 1e-10 * std::max(1.0, max_abs(ref)); };

  if (max_abs(Mat(alpha[g.identity()] - Mat::Identity(d, d))) > 1e-10)
    throw Error(ErrorKind::NotHomomorphism, "alpha_e is not the identity");
  for (std::size_t s = 0; s < n; ++s)
    if (numerical_rank(alpha[s]) < d)
      throw Error(ErrorKind::NotInvertible, "element " + std::to_string(s));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Mat& st = alpha[g.mul(s, t)];
      if (max_abs(Mat(alpha[s] * alpha[t] - st)) > tol(st)) {
        std::ostringstream os;
        os << "(" << s << "," << t << ")";
        throw Error(ErrorKind::NotHomomorphism, os.str());
      }
    }
  const Structure& str = a.structure();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec lhs = alpha[s] * str.left_basis(i).col(j);
        Vec rhs = str.multiply(alpha[s].col(i), alpha[s].col(j));
        if (max_abs(Vec(lhs - rhs)) > 1e-10 * std::max(1.0, max_abs(rhs)))
          throw Error(ErrorKind::NotMultiplicative, "element " + std::to_string(s));
      }

  DynamicalSystem sys;
  sys.a_ = a;
  sys.g_ = g;
  sys.alpha_ = std::move(alpha);
  sys.name_ = name;

  NormBounds c{0.0, 0.0};
  bool iso = true;
  for (std::size_t s = 0; s < n; ++s) {
    c = bounds_max(c, a.map_norm(sys.alpha_[s]));
    if (a.norm_tag() == NormTag::Operator && a.dim() > 1)
      iso = iso && sampled_isometry(a, sys.alpha_[s]);
    else if (a.dim() == 1)
      iso = iso && std::abs(std::abs(sys.alpha_[s](0, 0)) - 1.0) < 1e-12;
    else
      iso = iso && is_phase_permutation(sys.alpha_[s]);
  }
  if (exact_c_alpha) {
    double v = *exact_c_alpha;
    if (v < c.lower * (1 - 1e-9) || v > c.upper * (1 + 1e-9)) {
      std::ostringstream os;
      os << "declared C_alpha " << v << " outside computed bounds [" << c.lower << "," << c.upper << "]";
      throw Error(ErrorKind::InvalidConfig, os.str());
    }
    c = NormBounds::exact(v);
  }
  sys.c_alpha_ = c;
  sys.isometric_ = iso;
  return sys;
}

DynamicalSystem DynamicalSystem::opposite() const
{
  DynamicalSystem o = with_opposite_group();
  o.a_ = a_.opposite();
  o.name_ = name_ + "^op";
  return o;
}

DynamicalSystem DynamicalSystem::with_opposite_group() const
{
  DynamicalSystem o = *this;
  o.g_ = g_.opposite();
  for (std::size_t r = 0; r < g_.order(); ++r)
    o.alpha_[r] = alpha_[g_.inv(r)];
  o.name_ = name_ + "[G^op]";
  return o;
}

DynamicalSystem DynamicalSystem::with_opposite_algebra() const
{
  DynamicalSystem o = *this;
  o.a_ = a_.opposite();
  o.name_ = name_ + "[A^op]";
  return o;
}

DynamicalSystem trivial_action(const NormedAlgebra& a, const FiniteGroup& g)
{
  std::vector<Mat> alpha(g.order(), Mat::Identity(a.dim(), a.dim()));
  return make_system(a, g, std::move(alpha), "trivial");
}

DynamicalSystem coordinate_permutation(const NormedAlgebra& a, const FiniteGroup& g,
                                       const std::vector<std::vector<std::size_t>>& perm)
{
  if (perm.size() != g.order())
    throw Error(ErrorKind::DimensionMismatch, "one permutation per group element expected");
  std::vector<Mat> alpha;
  for (const auto& p : perm) {
    if (p.size() != a.dim())
      throw Error(ErrorKind::DimensionMismatch, "permutation length differs from algebra dimension");
    Mat m = Mat::Zero(a.dim(), a.dim());
    for (std::size_t i = 0; i < p.size(); ++i)
      m(p[i], i) = 1.0;
    alpha.push_back(m);
  }
  return make_system(a, g, std::move(alpha), "coordinate_permutation");
}

DynamicalSystem inner_conjugation(const NormedAlgebra& a, const FiniteGroup& g, const std::vector<Mat>& rho)
{
  if (a.norm_tag() != NormTag::Operator)
    throw Error(ErrorKind::InvalidConfig, "inner conjugation needs a matrix algebra");
  const std::size_t n = a.op_n(), d = a.dim();
  if (rho.size() != g.order())
    throw Error(ErrorKind::DimensionMismatch, "one matrix per group element expected");
  std::vector<Mat> alpha;
  double c = 0.0;
  for (const auto& r : rho) {
    if (std::size_t(r.rows()) != n || std::size_t(r.cols()) != n)
      throw Error(ErrorKind::DimensionMismatch, "representation matrix has wrong size");
    if (numerical_rank(r) < n)
      throw Error(ErrorKind::NotInvertible, "representation matrix");
    Mat ri = r.inverse();
    Mat m(d, d);
    for (std::size_t k = 0; k < d; ++k)
      m.col(k) = a.from_matrix(r * a.as_matrix(a.basis(k)) * ri);
    alpha.push_back(m);
    c = std::max(c, spectral_norm(r) * spectral_norm(ri));
  }
  return make_system(a, g, std::move(alpha), "inner_conjugation", c);
}

} // namespace xprod
