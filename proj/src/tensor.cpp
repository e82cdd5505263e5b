#include "xprod/tensor.hpp"

#include "xprod/error.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace xprod {

Vec kron_vec(const Vec& a, const Vec& b)
{
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

TensorAlgebra::TensorAlgebra(std::vector<NormedAlgebra> factors) : factors_(std::move(factors))
{
  if (factors_.empty())
    throw Error(ErrorKind::DimensionMismatch, "tensor product of no factors");
  s_ = factors_[0].structure();
  for (std::size_t i = 1; i < factors_.size(); ++i)
    s_ = kron(s_, factors_[i].structure());
}

Vec TensorAlgebra::elementary(const std::vector<Vec>& parts) const
{
  if (parts.size() != factors_.size())
    throw Error(ErrorKind::DimensionMismatch, "one vector per factor expected");
  Vec out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out = kron_vec(out, parts[i]);
  return out;
}

namespace {

Mat as_matrix(const Vec& t, Eigen::Index d1, Eigen::Index d2)
{
  Mat m(d1, d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      m(i, j) = t(i * d2 + j);
  return m;
}

// cost of T = sum_k x_k y_k^T given as the columns of x and the rows of y
double decomposition_cost(const NormedAlgebra& a, const NormedAlgebra& b, const Mat& x, const Mat& y)
{
  double c = 0.0;
  for (Eigen::Index k = 0; k < x.cols(); ++k)
    c += a.norm(x.col(k)) * b.norm(y.row(k).transpose());
  return c;
}

double greedy_cost(const NormedAlgebra& a, const NormedAlgebra& b, const Mat& t)
{
  const Eigen::Index d1 = t.rows(), d2 = t.cols();
  Mat r = t;
  double cost = 0.0;
  const double start = std::max(r.norm(), 1e-300);
  for (int step = 0; step < d1 * d2 && r.norm() > 1e-14 * start; ++step) {
    // candidate rank-one pieces: top singular pair, a row, a column
    std::vector<std::pair<Vec, Vec>> cands;
    Eigen::JacobiSVD<Mat> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    cands.emplace_back(svd.singularValues()(0) * svd.matrixU().col(0), svd.matrixV().col(0).conjugate());
    for (Eigen::Index i = 0; i < d1; ++i)
      cands.emplace_back(Vec::Unit(d1, i), r.row(i).transpose());
    for (Eigen::Index j = 0; j < d2; ++j)
      cands.emplace_back(r.col(j), Vec::Unit(d2, j));
    double best_score = -1.0;
    std::size_t best = 0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      Mat piece = cands[k].first * cands[k].second.transpose();
      double removed = r.squaredNorm() - (r - piece).squaredNorm();
      double c = a.norm(cands[k].first) * b.norm(cands[k].second);
      if (c <= 0)
        continue;
      double score = removed / c;
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    if (best_score <= 0)
      break;
    cost += a.norm(cands[best].first) * b.norm(cands[best].second);
    r -= cands[best].first * cands[best].second.transpose();
  }
  // whatever is left goes row by row
  for (Eigen::Index i = 0; i < d1; ++i)
    cost += a.norm(Vec::Unit(d1, i)) * b.norm(r.row(i).transpose());
  return cost;
}

} // namespace

ProjectiveBounds projective_norm_bounds(const NormedAlgebra& a, const NormedAlgebra& b, const Vec& t, Rng& rng,
                                        int restarts)
{
  const auto d1 = Eigen::Index(a.dim()), d2 = Eigen::Index(b.dim());
  if (t.size() != d1 * d2)
    throw Error(ErrorKind::DimensionMismatch, "tensor length differs from dA * dB");
  const Mat tm = as_matrix(t, d1, d2);
  ProjectiveBounds out;

  // upper: explicit decompositions
  double up = decomposition_cost(a, b, Mat::Identity(d1, d1), tm);
  up = std::min(up, decomposition_cost(a, b, tm, Mat::Identity(d2, d2)));
  {
    Eigen::JacobiSVD<Mat> svd(tm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Mat x = svd.matrixU() * svd.singularValues().cast<cd>().asDiagonal();
    Mat y = svd.matrixV().adjoint();
    up = std::min(up, decomposition_cost(a, b, x, y));
  }
  up = std::min(up, greedy_cost(a, b, tm));
  for (int k = 0; k < restarts; ++k) {
    Mat p = random_invertible(rng, d2);
    up = std::min(up, decomposition_cost(a, b, tm * p.inverse(), p));
    Mat q = random_invertible(rng, d1);
    up = std::min(up, decomposition_cost(a, b, q, q.inverse() * tm));
  }
  out.upper = up;

  // lower: rank-one forms phi (x) psi with unit dual norms, by alternating maximization
  double lo = 0.0;
  auto unit_dual = [](const NormedAlgebra& alg, Vec v) -> std::optional<Vec> {
    Vec phi = alg.norming_functional(v);
    double n = alg.dual_norm(phi);
    if (!(n > 0))
      return std::nullopt;
    return Vec(phi / n);
  };
  auto alternate = [&](Vec phi) {
    for (int it = 0; it < 30; ++it) {
      // psi -> sum_ij phi_i psi_j t_ij = psi(t^T phi)
      auto psi = unit_dual(b, tm.transpose() * phi);
      if (!psi)
        return;
      auto nphi = unit_dual(a, tm * *psi);
      if (!nphi)
        return;
      double v = std::abs((nphi->transpose() * tm * *psi)(0, 0));
      lo = std::max(lo, v);
      if ((*nphi - phi).norm() < 1e-15)
        break;
      phi = *nphi;
    }
  };
  {
    Eigen::JacobiSVD<Mat> svd(tm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (auto phi = unit_dual(a, svd.matrixU().col(0)))
      alternate(*phi);
  }
  for (Eigen::Index i = 0; i < d1; ++i)
    if (auto phi = unit_dual(a, Vec::Unit(d1, i)))
      alternate(*phi);
  for (int k = 0; k < restarts; ++k) {
    Vec phi = random_vec(rng, d1);
    alternate(phi / a.dual_norm(phi));
  }
  // a full-rank form: the phase pattern of t, normalized by a proven bound on its norm
  Mat bform = tm.unaryExpr([](cd z) { return std::abs(z) > 0 ? std::conj(z) / std::abs(z) : cd(0.0); });
  NormBounds bn = a.ball_sup([&](const Vec& x) {
    Vec psi = bform.transpose() * x; // y -> x^T B y
    return b.dual_norm(psi);
  });
  if (bn.upper > 0)
    lo = std::max(lo, std::abs((tm.cwiseProduct(bform)).sum()) / bn.upper);
  out.lower = std::min(lo, out.upper);
  return out;
}

Mat AlgebraRep::apply(const Vec& x) const
{
  Mat out = Mat::Zero(space_dim(), space_dim());
  for (std::size_t k = 0; k < images.size(); ++k)
    if (x(k) != 0.0)
      out += x(k) * images[k];
  return out;
}

double AlgebraRep::multiplicativity_error() const
{
  double worst = 0.0;
  for (std::size_t i = 0; i < domain.dim(); ++i)
    for (std::size_t j = 0; j < domain.dim(); ++j)
      worst = std::max(worst, rel_diff(apply(domain.left_basis(i).col(j)), Mat(images[i] * images[j])));
  return worst;
}

AlgebraRep as_algebra_rep(const ConvolutionRep& t, const Structure& domain)
{
  if (t.images.size() != domain.dim())
    throw Error(ErrorKind::DimensionMismatch, "image count differs from the domain dimension");
  return AlgebraRep{domain, t.space, t.images};
}

AlgebraRep odot(const AlgebraRep& p1, const AlgebraRep& p2, double tol)
{
  if (p1.space_dim() != p2.space_dim())
    throw Error(ErrorKind::DimensionMismatch, "factors act on different spaces");
  double scale = 1.0;
  for (const auto* fam : {&p1.images, &p2.images})
    for (const auto& x : *fam)
      scale = std::max(scale, max_abs(x));
  double c = max_commutator(p1.images, p2.images);
  if (c > tol * scale * scale) {
    std::ostringstream os;
    os << "factor images fail to commute (" << c << ")";
    throw Error(ErrorKind::NotCommuting, os.str());
  }
  AlgebraRep out{kron(p1.domain, p2.domain), p1.space, {}};
  for (const auto& x : p1.images)
    for (const auto& y : p2.images)
      out.images.push_back(x * y);
  return out;
}

std::vector<AlgebraRep> decompose_rep(const AlgebraRep& pi, const std::vector<Structure>& factors,
                                      const std::vector<Vec>& units)
{
  if (factors.size() != units.size())
    throw Error(ErrorKind::DimensionMismatch, "one unit per factor expected");
  std::size_t total = 1;
  for (const auto& f : factors)
    total *= f.dim();
  if (total != pi.domain.dim())
    throw Error(ErrorKind::DimensionMismatch, "factor dimensions do not multiply to the domain dimension");
  std::vector<AlgebraRep> out;
  for (std::size_t slot = 0; slot < factors.size(); ++slot) {
    AlgebraRep r{factors[slot], pi.space, {}};
    for (std::size_t k = 0; k < factors[slot].dim(); ++k) {
      Vec v = Vec::Ones(1);
      for (std::size_t i = 0; i < factors.size(); ++i)
        v = kron_vec(v, i == slot ? Vec(Vec::Unit(Eigen::Index(factors[i].dim()), Eigen::Index(k))) : units[i]);
      r.images.push_back(pi.apply(v));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepPoint> uniqueness_sweep(const AlgebraRep& pi, const AlgebraRep& p1, const AlgebraRep& p2,
                                         const std::vector<cd>& cs, double tol)
{
  std::vector<SweepPoint> out;
  for (cd c : cs) {
    AlgebraRep r1 = p1, r2 = p2;
    for (auto& x : r1.images)
      x *= c;
    for (auto& x : r2.images)
      x /= c;
    AlgebraRep prod = odot(r1, r2);
    double perr = 0.0;
    for (std::size_t k = 0; k < prod.images.size(); ++k)
      perr = std::max(perr, rel_diff(prod.images[k], pi.images[k]));
    double merr = std::max(r1.multiplicativity_error(), r2.multiplicativity_error());
    out.push_back({c, perr, merr, perr <= tol && merr <= tol});
  }
  return out;
}

NFold n_fold_correspondence(const std::vector<CrossedProduct>& cps, const std::vector<CovariantPair>& pairs,
                            double tol)
{
  if (cps.size() != pairs.size() || cps.empty())
    throw Error(ErrorKind::DimensionMismatch, "one pair per crossed product expected");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      double scale = 1.0;
      for (const auto* fam : {&pairs[i].pi, &pairs[i].u, &pairs[j].pi, &pairs[j].u})
        for (const auto& x : *fam)
          scale = std::max(scale, max_abs(x));
      double c = std::max({max_commutator(pairs[i].pi, pairs[j].pi), max_commutator(pairs[i].pi, pairs[j].u),
                           max_commutator(pairs[i].u, pairs[j].pi), max_commutator(pairs[i].u, pairs[j].u)});
      if (c > tol * scale * scale) {
        std::ostringstream os;
        os << "pairs " << i << " and " << j << " (" << c << ")";
        throw Error(ErrorKind::NotCommuting, os.str());
      }
    }
  NFold out;
  for (std::size_t i = 0; i < cps.size(); ++i)
    out.factors.push_back(as_algebra_rep(pair_to_rep(cps[i], pairs[i]), cps[i].structure()));
  out.product = out.factors[0];
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    out.product = odot(out.product, out.factors[i], tol);
  return out;
}

std::vector<CovariantPair> n_fold_inverse(const std::vector<CrossedProduct>& cps, const AlgebraRep& product)
{
  std::vector<Structure> fs;
  std::vector<Vec> units;
  for (const auto& cp : cps) {
    auto u = cp.unit();
    if (!u)
      throw Error(ErrorKind::HypothesisViolated, "crossed product factor is not unital");
    fs.push_back(cp.structure());
    units.push_back(*u);
  }
  auto parts = decompose_rep(product, fs, units);
  std::vector<CovariantPair> out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    ConvolutionRep t{cps[i].system(), cps[i].basis(), parts[i].space, parts[i].images, false};
    out.push_back(rep_to_pair(t, "factor " + std::to_string(i)));
  }
  return out;
}

} // namespace xprod
