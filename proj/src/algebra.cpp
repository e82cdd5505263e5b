#include "xprod/algebra.hpp"

#include "xprod/error.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xprod {

Structure::Structure(std::size_t dim, std::vector<cd> coeffs) : d_(dim), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != d_ * d_ * d_)
    throw Error(ErrorKind::DimensionMismatch, "structure constants need d^3 entries");
  left_.assign(d_, Mat::Zero(d_, d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k)
        left_[i](k, j) = c(i, j, k);
}

Vec Structure::multiply(const Vec& a, const Vec& b) const
{
  if (std::size_t(a.size()) != d_ || std::size_t(b.size()) != d_)
    throw Error(ErrorKind::DimensionMismatch, "operand dimension differs from algebra dimension");
  return left_mult(a) * b;
}

Mat Structure::left_mult(const Vec& a) const
{
  Mat m = Mat::Zero(d_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    if (a(i) != 0.0)
      m += a(i) * left_[i];
  return m;
}

Mat Structure::right_mult(const Vec& a) const
{
  // column j of (x -> x a) is e_j a = sum_i a_i e_j e_i
  Mat m = Mat::Zero(d_, d_);
  for (std::size_t j = 0; j < d_; ++j)
    m.col(j) = left_[j] * a;
  return m;
}

Structure Structure::opposite() const
{
  std::vector<cd> o(coeffs_.size());
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k)
        o[(i * d_ + j) * d_ + k] = c(j, i, k);
  return Structure(d_, std::move(o));
}

double Structure::associativity_defect() const
{
  double worst = 0.0;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      Vec ij = left_[i].col(j);
      for (std::size_t k = 0; k < d_; ++k) {
        Vec lhs = left_mult(ij).col(k);
        Vec rhs = left_[i] * left_[j].col(k);
        worst = std::max(worst, max_abs(Vec(lhs - rhs)));
      }
    }
  return worst;
}

namespace {

std::optional<Vec> solve_exact(const Mat& a, const Vec& b, double tol)
{
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
  Vec x = cod.solve(b);
  if ((a * x - b).norm() > tol * std::max(1.0, b.norm()))
    return std::nullopt;
  return x;
}

} // namespace

std::optional<Vec> Structure::find_left_identity(double tol) const
{
  // sum_i u_i L_i = I
  Mat a(d_ * d_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    a.col(i) = vec_of(left_[i]);
  return solve_exact(a, vec_of(Mat::Identity(d_, d_)), tol);
}

std::optional<Vec> Structure::find_right_identity(double tol) const
{
  // L_i u = e_i for every i
  Mat a(d_ * d_, d_);
  Vec b = Vec::Zero(d_ * d_);
  for (std::size_t i = 0; i < d_; ++i) {
    a.middleRows(i * d_, d_) = left_[i];
    b(i * d_ + i) = 1.0;
  }
  return solve_exact(a, b, tol);
}

Structure kron(const Structure& a, const Structure& b)
{
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<cd> c(d * d * d, 0.0);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1)
      for (std::size_t k1 = 0; k1 < da; ++k1) {
        cd x = a.c(i1, j1, k1);
        if (x == 0.0)
          continue;
        for (std::size_t i2 = 0; i2 < db; ++i2)
          for (std::size_t j2 = 0; j2 < db; ++j2)
            for (std::size_t k2 = 0; k2 < db; ++k2) {
              cd y = b.c(i2, j2, k2);
              if (y == 0.0)
                continue;
              std::size_t i = i1 * db + i2, j = j1 * db + j2, k = k1 * db + k2;
              c[(i * d + j) * d + k] = x * y;
            }
      }
  return Structure(d, std::move(c));
}

const char* to_string(NormTag t)
{
  switch (t) {
  case NormTag::Sup: return "sup";
  case NormTag::One: return "one";
  case NormTag::Operator: return "operator";
  }
  return "?";
}

double NormedAlgebra::identity_bound() const
{
  if (identity_)
    return norm(*identity_);
  if (left_identity_)
    return norm(*left_identity_);
  if (right_identity_)
    return norm(*right_identity_);
  return 0.0;
}

double NormedAlgebra::norm(const Vec& a) const
{
  switch (tag_) {
  case NormTag::Sup: return vec_norm(a, PNorm::Inf);
  case NormTag::One: return vec_norm(a, PNorm::One);
  case NormTag::Operator: return spectral_norm(as_matrix(a));
  }
  return 0.0;
}

Mat NormedAlgebra::as_matrix(const Vec& a) const
{
  Mat m(op_n_, op_n_);
  for (std::size_t i = 0; i < op_n_; ++i)
    for (std::size_t j = 0; j < op_n_; ++j)
      m(i, j) = a(i * op_n_ + j);
  return m;
}

Vec NormedAlgebra::from_matrix(const Mat& m) const
{
  Vec a(op_n_ * op_n_);
  for (std::size_t i = 0; i < op_n_; ++i)
    for (std::size_t j = 0; j < op_n_; ++j)
      a(i * op_n_ + j) = m(i, j);
  return a;
}

NormedAlgebra NormedAlgebra::opposite() const
{
  NormedAlgebra o = *this;
  o.s_ = s_.opposite();
  o.left_identity_ = right_identity_;
  o.right_identity_ = left_identity_;
  o.name_ = name_ + "^op";
  return o;
}

namespace {

constexpr int kPhaseGrid = 64;

// Unitary U exp(i t H) for a Hermitian H, via the eigendecomposition of H.
Mat rotate(const Mat& u, const Mat& h, double t)
{
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec ph(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    ph(i) = std::polar(1.0, t * es.eigenvalues()(i));
  return u * es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

NormBounds NormedAlgebra::ball_sup(const std::function<double(const Vec&)>& f) const
{
  const std::size_t d = dim();
  std::vector<double> fe(d);
  double tri = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    fe[k] = f(basis(k));
    tri += fe[k];
  }

  if (tag_ == NormTag::One || d == 1)
    return NormBounds::exact(*std::max_element(fe.begin(), fe.end()));

  Rng rng(0x5eed5eedULL);

  if (tag_ == NormTag::Sup) {
    // Extreme points are unimodular vectors; fix the first phase to 1.
    const double h = 2.0 * std::numbers::pi / kPhaseGrid;
    double best = 0.0;
    std::vector<double> best_theta(d, 0.0);
    auto eval = [&](const std::vector<double>& th) {
      Vec a(d);
      for (std::size_t k = 0; k < d; ++k)
        a(k) = std::polar(1.0, th[k]);
      return f(a);
    };
    auto consider = [&](const std::vector<double>& th) {
      double v = eval(th);
      if (v > best) {
        best = v;
        best_theta = th;
      }
    };

    bool full_grid = d <= 3;
    if (full_grid) {
      std::size_t total = 1;
      for (std::size_t k = 1; k < d; ++k)
        total *= kPhaseGrid;
      std::vector<double> th(d, 0.0);
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t r = idx;
        for (std::size_t k = 1; k < d; ++k) {
          th[k] = h * double(r % kPhaseGrid);
          r /= kPhaseGrid;
        }
        consider(th);
      }
    } else {
      std::uniform_real_distribution<double> ud(0.0, 2.0 * std::numbers::pi);
      std::size_t signs = std::size_t(1) << std::min<std::size_t>(d - 1, 10);
      std::vector<double> th(d, 0.0);
      for (std::size_t m = 0; m < signs; ++m) {
        for (std::size_t k = 1; k < d; ++k)
          th[k] = ((m >> (k - 1)) & 1) ? std::numbers::pi : 0.0;
        consider(th);
      }
      for (int s = 0; s < 512; ++s) {
        for (std::size_t k = 1; k < d; ++k)
          th[k] = ud(rng);
        consider(th);
      }
    }
    double grid_best = best;

    // coordinate-wise golden section around the best point
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 3; ++sweep)
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<double> th = best_theta;
        double lo = th[k] - h, hi = th[k] + h;
        for (int it = 0; it < 60; ++it) {
          double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
          th[k] = x1;
          double f1 = eval(th);
          th[k] = x2;
          double f2 = eval(th);
          if (f1 > f2)
            hi = x2;
          else
            lo = x1;
        }
        th[k] = 0.5 * (lo + hi);
        consider(th);
      }

    double upper = tri;
    if (full_grid) {
      double lip = 0.0;
      for (std::size_t k = 1; k < d; ++k)
        lip += fe[k];
      upper = std::min(upper, grid_best + 0.5 * h * lip);
    }
    return {best, std::max(best, upper)};
  }

  // Operator tag: extreme points of the unit ball of M_n are the unitaries.
  const auto n = Eigen::Index(op_n_);
  double best = 0.0;
  std::vector<std::pair<double, Mat>> cands;
  auto consider = [&](const Mat& u) {
    double v = f(from_matrix(u));
    best = std::max(best, v);
    cands.emplace_back(v, u);
  };
  consider(Mat::Identity(n, n));
  if (n <= 3) {
    std::vector<int> perm(n);
    for (Eigen::Index i = 0; i < n; ++i)
      perm[i] = int(i);
    std::size_t nph = 1;
    for (Eigen::Index i = 1; i < n; ++i)
      nph *= 4;
    do {
      for (std::size_t m = 0; m < nph; ++m) {
        Mat p = Mat::Zero(n, n);
        std::size_t r = m;
        for (Eigen::Index i = 0; i < n; ++i) {
          cd ph = 1.0;
          if (i > 0) {
            ph = std::polar(1.0, std::numbers::pi / 2.0 * double(r % 4));
            r /= 4;
          }
          p(perm[i], i) = ph;
        }
        consider(p);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (int s = 0; s < 32; ++s)
    consider(random_unitary(rng, n));

  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  cands.resize(std::min<std::size_t>(cands.size(), 3));
  for (auto& [val, u] : cands) {
    double t = 0.5;
    for (int it = 0; it < 60 && t > 1e-7; ++it) {
      Mat g = random_mat(rng, n, n);
      Mat herm = 0.5 * (g + g.adjoint());
      Mat v = rotate(u, herm, t);
      double fv = f(from_matrix(v));
      if (fv > val) {
        val = fv;
        u = v;
      } else {
        t *= 0.7;
      }
    }
    best = std::max(best, val);
  }
  return {best, std::max(best, tri)};
}

NormBounds NormedAlgebra::map_norm(const Mat& m) const
{
  switch (tag_) {
  case NormTag::Sup: return NormBounds::exact(induced_norm(m, PNorm::Inf));
  case NormTag::One: return NormBounds::exact(induced_norm(m, PNorm::One));
  case NormTag::Operator: {
    NormBounds b = ball_sup([&](const Vec& a) { return norm(m * a); });
    // ||m a||_op <= ||m a||_F <= s_max(m) ||a||_F <= s_max(m) sqrt(n) ||a||_op
    double frob = spectral_norm(m) * std::sqrt(double(op_n_));
    b.upper = std::max(b.lower, std::min(b.upper, frob));
    return b;
  }
  }
  return {};
}

Vec NormedAlgebra::norming_functional(const Vec& a) const
{
  const std::size_t d = dim();
  Vec phi = Vec::Zero(d);
  switch (tag_) {
  case NormTag::Sup: {
    Eigen::Index k = 0;
    a.cwiseAbs().maxCoeff(&k);
    double m = std::abs(a(k));
    phi(k) = m > 0 ? std::conj(a(k)) / m : 1.0;
    return phi;
  }
  case NormTag::One:
    for (std::size_t i = 0; i < d; ++i) {
      double m = std::abs(a(i));
      phi(i) = m > 0 ? std::conj(a(i)) / m : 0.0;
    }
    return phi;
  case NormTag::Operator: {
    Eigen::JacobiSVD<Mat> svd(as_matrix(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vec u = svd.matrixU().col(0), v = svd.matrixV().col(0);
    // phi(X) = u^* X v
    Mat p = u.conjugate() * v.transpose();
    return from_matrix(p);
  }
  }
  return phi;
}

double NormedAlgebra::dual_norm(const Vec& phi) const
{
  switch (tag_) {
  case NormTag::Sup: return vec_norm(phi, PNorm::One);
  case NormTag::One: return vec_norm(phi, PNorm::Inf);
  case NormTag::Operator: {
    Eigen::JacobiSVD<Mat> svd(as_matrix(phi));
    return svd.singularValues().sum();
  }
  }
  return 0.0;
}

NormedAlgebra make_algebra(Structure s, NormTag tag, const std::string& name, std::optional<std::size_t> op_n)
{
  NormedAlgebra a;
  const std::size_t d = s.dim();
  if (tag == NormTag::Operator) {
    std::size_t n = op_n.value_or(std::size_t(std::lround(std::sqrt(double(d)))));
    if (n * n != d)
      throw Error(ErrorKind::DimensionMismatch, "operator norm tag needs d = n^2");
    a.op_n_ = n;
  }
  double defect = s.associativity_defect();
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "defect " << defect;
    throw Error(ErrorKind::NotAssociative, os.str());
  }
  a.s_ = std::move(s);
  a.tag_ = tag;
  a.name_ = name;
  a.left_identity_ = a.s_.find_left_identity();
  a.right_identity_ = a.s_.find_right_identity();
  if (a.left_identity_ && a.right_identity_)
    a.identity_ = a.left_identity_;
  return a;
}

NormedAlgebra scalar_algebra()
{
  return make_algebra(Structure(1, {1.0}), NormTag::One, "scalars");
}

NormedAlgebra diagonal_algebra(std::size_t n)
{
  std::vector<cd> c(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    c[(i * n + i) * n + i] = 1.0;
  return make_algebra(Structure(n, std::move(c)), NormTag::Sup, "diag(" + std::to_string(n) + ")");
}

NormedAlgebra matrix_algebra(std::size_t n)
{
  const std::size_t d = n * n;
  std::vector<cd> c(d * d * d, 0.0);
  // E_ij E_jl = E_il
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        c[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1.0;
  return make_algebra(Structure(d, std::move(c)), NormTag::Operator, "matrix(" + std::to_string(n) + ")", n);
}

NormedAlgebra column_algebra()
{
  // x = E11, y = E21: E11 E11 = E11, E21 E11 = E21, the rest vanish
  std::vector<cd> c(8, 0.0);
  c[(0 * 2 + 0) * 2 + 0] = 1.0;
  c[(1 * 2 + 0) * 2 + 1] = 1.0;
  return make_algebra(Structure(2, std::move(c)), NormTag::One, "column(2)");
}

NormedAlgebra algebra_by_name(const std::string& name)
{
  auto arg = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')')
      return std::nullopt;
    try {
      return std::stoul(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    } catch (...) {
      return std::nullopt;
    }
  };
  if (name == "scalars")
    return scalar_algebra();
  if (auto n = arg("diag"))
    return diagonal_algebra(*n);
  if (auto n = arg("matrix"))
    return matrix_algebra(*n);
  if (name == "column(2)")
    return column_algebra();
  throw Error(ErrorKind::InvalidConfig, "unknown algebra '" + name + "'");
}

} // namespace xprod
